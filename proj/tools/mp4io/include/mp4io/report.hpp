#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mp4/multiplicity.hpp"
#include "mp4/parameters.hpp"

namespace mp4io {

// Machine form of the subcommand reports. Every builder is deterministic:
// arrays follow scenario declaration order or the documented sort order.

nlohmann::json validate_report(const mp4::Scenario& scenario);
nlohmann::json classify_report(const mp4::Scenario& scenario);
nlohmann::json component_group_report(const mp4::GlobalPacket& gp);
nlohmann::json enumerate_report(const mp4::GlobalPacket& gp, bool include_vanishing);
nlohmann::json packet_report(const mp4::GlobalPacket& gp, const std::string& place_id);
nlohmann::json residual_report(const mp4::Scenario& scenario);
nlohmann::json self_test_report(const mp4::GlobalPacket& gp);

nlohmann::json shimura_report(const std::optional<std::string>& row);
nlohmann::json ktype_catalog_report();

// Shimura table, K-type catalog and, when a scenario is given, its local
// packets.
nlohmann::json export_tables(const mp4::Scenario* scenario);

// Human form: an indented outline of the machine form.
std::string to_text(const nlohmann::json& report);

nlohmann::json descriptor_json(const mp4::RepDescriptor& d);

}  // namespace mp4io
