#include "mp4/shimura.hpp"

#include <set>

#include "mp4/error.hpp"

namespace mp4 {

namespace {

ShimuraEntry entry(std::string label, std::string mp, Sign space, const std::string& so) {
  const std::string group = space == Sign::plus ? "SO(V2+):" : "SO(V2-):";
  return {std::move(label), named(std::move(mp)), space, named(group + so)};
}

std::vector<ShimuraRow> build_table() {
  const Sign P = Sign::plus;
  const Sign M = Sign::minus;
  std::vector<ShimuraRow> rows;
  rows.push_back({"varrho(x)S1",
                  {entry("(+)", "pi^+_sc[varrho]", P, "sigma^+_sc[varrho]"),
                   entry("(-)", "pi^-_sc[varrho]", M, "sigma^-_sc[varrho]")}});
  rows.push_back({"rho(x)S2",
                  {entry("(+)", "St~_psi(tau)", P, "St^+(tau)"),
                   entry("(-)", "pi^-_sc[rho(x)S2]", M, "sigma^-_sc[rho(x)S2]")}});
  rows.push_back({"chi_a(x)S4",
                  {entry("(+)", "St~^+_{chi_a,psi}", P, "St^+_{chi_a}"),
                   entry("(-)", "St~^-_{chi_a,psi}", M, "St^-_{chi_a}")}});
  rows.push_back({"1(x)S4",
                  {entry("(+)", "St~^-_{1,psi}", P, "St^+_1"),
                   entry("(-)", "St~^+_{1,psi}", M, "St^-_1")}});
  rows.push_back({"rho1+rho2",
                  {entry("(+,+)", "pi^{+,+}_sc[rho1,rho2]", P, "sigma^{+,+}_sc[rho1,rho2]"),
                   entry("(+,-)", "pi^{+,-}_sc[rho1,rho2]", M, "sigma^{+,-}_sc[rho1,rho2]"),
                   entry("(-,+)", "pi^{-,+}_sc[rho1,rho2]", M, "sigma^{-,+}_sc[rho1,rho2]"),
                   entry("(-,-)", "pi^{-,-}_sc[rho1,rho2]", P, "sigma^{-,-}_sc[rho1,rho2]")}});
  rows.push_back(
      {"rho0+chi_a(x)S2",
       {entry("(+,+)", "St~_psi(chi_a,pi0^+)", P, "St^+(chi_a,sigma0^+)"),
        entry("(+,-)", "theta_{W2,V1^{eps_a},psi_a}((sigma0^{eps_a} x nu_a)^{-eps0*chi_a(-1)})", M,
              "theta_{W1,V2^-,psi_a}(pi0^{eps_a}) x nu_a"),
        entry("(-,+)", "St~_psi(chi_a,pi0^-)", M, "St^-(chi_a,sigma0^-)"),
        entry("(-,-)", "theta_{W2,V1^{-eps_a},psi_a}((sigma0^{-eps_a} x nu_a)^{eps0*chi_a(-1)})", P,
              "theta_{W1,V2^+,psi_a}(pi0^{-eps_a}) x nu_a")}});
  rows.push_back({"rho0+1(x)S2",
                  {entry("(+,+)", "theta_{W2,V1^+,psi}(sigma0^{+,-eps0})", P, "St^+(1,sigma0^+)"),
                   entry("(+,-)", "St~_psi(1,pi0^+)", M, "theta_{W1,V2^-,psi}(pi0^+)"),
                   entry("(-,+)", "theta_{W2,V1^-,psi}(sigma0^{-,eps0})", M, "St^-(1,sigma0^-)"),
                   entry("(-,-)", "St~_psi(1,pi0^-)", P, "theta_{W1,V2^+,psi}(pi0^-)")}});
  rows.push_back(
      {"chi_a(x)S2+chi_b(x)S2",
       {entry("(+,+)", "St~_psi(chi_a,st~_{chi_b,psi})", P, "St^+(chi_a,st_{chi_b})"),
        entry("(+,-)", "St~_psi(chi_a,omega^-_{W1,psi_b})", M, "St^-(chi_a,nu_b)"),
        entry("(-,+)", "St~_psi(chi_b,omega^-_{W1,psi_a})", M, "St^-(chi_b,nu_a)"),
        entry("(-,-)", "theta_{W2,V1^-,psi_b}(nu_ab^{chi_ab(-1)})", P,
              "theta_{W1,V2^+,psi_b}(omega^-_{W1,psi_a}) x nu_b")}});
  rows.push_back(
      {"chi_a(x)S2+1(x)S2",
       {entry("(+,+)", "St~_psi(chi_a,omega^-_{W1,psi})", P, "St^+(chi_a,st_1)"),
        entry("(+,-)", "St~_psi(chi_a,st~_{1,psi})", M, "St^-(chi_a,nu_1)"),
        entry("(-,+)", "theta_{W2,V1^-,psi}(nu_a^{chi_a(-1)})", M, "St^-(1,nu_a)"),
        entry("(-,-)", "St~_psi(1,omega^-_{W1,psi_a})", P,
              "theta_{W1,V2^+,psi}(omega^-_{W1,psi_a})")}});
  rows.push_back({"phi0+phi0",
                  {entry("(+,+)", "pi_gen,psi(tau0)", P, "sigma_gen(tau0)"),
                   entry("(-,-)", "pi_ng,psi(tau0)", P, "sigma_ng(tau0)")}});
  return rows;
}

Error row_not_found(const std::string& what) { return validation_error("RowNotFound", what); }

std::string normalize_label(const std::string& label) {
  if (!label.empty() && label.front() == '(') return label;
  return "(" + label + ")";
}

}  // namespace

const std::vector<ShimuraRow>& shimura_table() {
  static const std::vector<ShimuraRow> table = build_table();
  return table;
}

const ShimuraRow& shimura_row(const std::string& tag) {
  for (const auto& row : shimura_table()) {
    if (row.tag == tag) return row;
  }
  throw row_not_found("no Shimura table row for L-parameter '" + tag + "'");
}

RepDescriptor shimura_correspondence(const std::string& tag, ShimuraDirection direction,
                                     const std::string& label) {
  const std::string wanted = normalize_label(label);
  for (const auto& e : shimura_row(tag).entries) {
    if (e.label == wanted) return direction == ShimuraDirection::mp_to_so ? e.so : e.mp;
  }
  throw row_not_found("row '" + tag + "' has no label " + wanted);
}

RepDescriptor shimura_transfer(const std::string& tag, ShimuraDirection direction,
                               const RepDescriptor& source) {
  const std::string key = render(normalize(source));
  for (const auto& e : shimura_row(tag).entries) {
    const RepDescriptor& from = direction == ShimuraDirection::mp_to_so ? e.mp : e.so;
    if (render(normalize(from)) == key) return direction == ShimuraDirection::mp_to_so ? e.so : e.mp;
  }
  throw row_not_found("row '" + tag + "' does not contain " + key);
}

bool shimura_row_is_bijective(const ShimuraRow& row) {
  std::set<std::string> mp;
  std::set<std::string> so;
  for (const auto& e : row.entries) {
    mp.insert(render(e.mp));
    so.insert(render(e.so));
  }
  return mp.size() == row.entries.size() && so.size() == row.entries.size();
}

}  // namespace mp4
