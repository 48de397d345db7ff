#include "mp4/descriptor.hpp"

#include <algorithm>

namespace mp4 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string character_rep(const std::string& twist) { return twist == "1" ? "1" : "chi_" + twist; }

std::string psi_of(const std::string& twist) { return twist == "1" ? "psi" : "psi_" + twist; }

std::string half(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

std::string render_segment(const Segment& s) {
  if (s.exponent == Rational(0)) return s.rep;
  const std::string power = (s.rank == 1 ? "|.|^{" : "|det|^{") + to_string(s.exponent) + "}";
  return s.rep == "1" && s.rank == 1 ? power : s.rep + power;
}

int metaplectic_rank(const std::string& group) {
  if (group.size() > 2 && group.rfind("Mp", 0) == 0) {
    return std::stoi(group.substr(2)) / 2;
  }
  return 0;
}

std::string parabolic_for(const LanglandsQuotient& q) {
  const int r = metaplectic_rank(q.group);
  if (r == 0) return q.parabolic;
  const bool all_rank_one = std::all_of(q.segments.begin(), q.segments.end(),
                                        [](const Segment& s) { return s.rank == 1; });
  if (q.inner.empty() && all_rank_one) return "B";
  if (r == 2 && q.inner.empty() && q.segments.size() == 1) return "P2";
  if (r == 2 && !q.inner.empty() && q.segments.size() == 1 && q.segments[0].rank == 1) return "P1";
  std::string name = "P";
  for (std::size_t i = 0; i < q.segments.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(q.segments[i].rank);
  }
  return name;
}

RepDescriptor expand_weil(const ElementaryWeil& w) {
  if (w.n < 2) return w;
  std::vector<Segment> segs;
  const int last = w.parity == Sign::plus ? 1 : 2;
  for (int k = w.n; k >= last; --k) segs.push_back(segment(character_rep(w.twist), Rational(2 * k - 1, 2)));
  std::vector<RepDescriptor> inner;
  if (w.parity == Sign::minus) inner.push_back(ElementaryWeil{1, Sign::minus, w.twist});
  return quotient("", std::move(segs), std::move(inner), "Mp" + std::to_string(2 * w.n));
}

}  // namespace

RepDescriptor zero() { return Zero{}; }

RepDescriptor named(std::string name) { return Named{std::move(name)}; }

Segment segment(std::string rep, Rational exponent, int rank) {
  return Segment{std::move(rep), rank, exponent};
}

RepDescriptor quotient(std::string parabolic, std::vector<Segment> segments,
                       std::vector<RepDescriptor> inner, std::string group, std::string psi) {
  return LanglandsQuotient{std::move(group), std::move(parabolic), std::move(psi),
                           std::move(segments), std::move(inner)};
}

RepDescriptor direct_sum(std::vector<RepDescriptor> items) { return DirectSum{std::move(items)}; }

RepDescriptor omega(int n, Sign parity, std::string twist) {
  return ElementaryWeil{n, parity, std::move(twist)};
}

RepDescriptor normalize(const RepDescriptor& d) {
  return std::visit(
      overloaded{
          [](const ElementaryWeil& w) -> RepDescriptor {
            RepDescriptor e = expand_weil(w);
            if (std::holds_alternative<ElementaryWeil>(e.node)) return e;
            return normalize(e);
          },
          [](const LanglandsQuotient& q0) -> RepDescriptor {
            LanglandsQuotient q = q0;
            for (auto& in : q.inner) in = normalize(in);
            if (!q.inner.empty() && q.inner[0].is_zero()) return zero();
            // Absorb a nested metaplectic quotient when the exponents stay in
            // Langlands order.
            while (!q.inner.empty()) {
              const auto* in = std::get_if<LanglandsQuotient>(&q.inner[0].node);
              if (!in || metaplectic_rank(in->group) == 0 || in->psi != q.psi) break;
              Rational outer_min = q.segments.empty() ? Rational(1000) : q.segments[0].exponent;
              for (const auto& s : q.segments) outer_min = std::min(outer_min, s.exponent);
              Rational inner_max = -1;
              for (const auto& s : in->segments) inner_max = std::max(inner_max, s.exponent);
              if (inner_max > outer_min) break;
              LanglandsQuotient nested = *in;
              q.segments.insert(q.segments.end(), nested.segments.begin(), nested.segments.end());
              q.inner = std::move(nested.inner);
            }
            if (q.segments.empty() && q.inner.size() == 1) return q.inner[0];
            std::stable_sort(q.segments.begin(), q.segments.end(),
                             [](const Segment& x, const Segment& y) {
                               if (x.exponent != y.exponent) return x.exponent > y.exponent;
                               if (x.rep != y.rep) return x.rep < y.rep;
                               return x.rank < y.rank;
                             });
            q.parabolic = parabolic_for(q);
            return q;
          },
          [](const ThetaLiftDesc& t0) -> RepDescriptor {
            ThetaLiftDesc t = t0;
            for (auto& s : t.source) s = normalize(s);
            if (t.source.empty() || t.source[0].is_zero()) return zero();
            return t;
          },
          [](const DirectSum& s) -> RepDescriptor {
            std::vector<RepDescriptor> flat;
            for (const auto& item : s.items) {
              RepDescriptor n = normalize(item);
              if (n.is_zero()) continue;
              if (const auto* inner = std::get_if<DirectSum>(&n.node)) {
                flat.insert(flat.end(), inner->items.begin(), inner->items.end());
              } else {
                flat.push_back(std::move(n));
              }
            }
            if (flat.empty()) return zero();
            if (flat.size() == 1) return flat[0];
            std::sort(flat.begin(), flat.end(), [](const RepDescriptor& x, const RepDescriptor& y) {
              return render(x) < render(y);
            });
            return DirectSum{std::move(flat)};
          },
          [](const auto& other) -> RepDescriptor { return other; },
      },
      d.node);
}

std::string render(const RepDescriptor& d) {
  return std::visit(
      overloaded{
          [](const Zero&) { return std::string("0"); },
          [](const LanglandsQuotient& q) {
            std::string out = q.group == "Mp4" ? "" : q.group + ":";
            out += "J_{" + q.parabolic + (q.psi.empty() ? "" : "," + q.psi) + "}(";
            bool first = true;
            for (const auto& s : q.segments) {
              if (!first) out += ", ";
              out += render_segment(s);
              first = false;
            }
            for (const auto& in : q.inner) {
              if (!first) out += ", ";
              out += render(in);
              first = false;
            }
            return out + ")";
          },
          [](const ThetaLiftDesc& t) {
            std::string out = "theta_{V" + std::to_string(t.space_rank) + to_string(t.space_eps) +
                              "," + t.psi + "}(";
            for (const auto& s : t.source) out += render(s);
            return out + ")";
          },
          [](const DiscreteSeriesMp4& ds) { return "pi_DS[" + ds.lparam + "]^" + ds.label; },
          [](const ElementaryWeil& w) {
            return "omega^" + to_string(w.parity) + "_{W" + std::to_string(w.n) + "," +
                   psi_of(w.twist) + "}";
          },
          [](const LimitOrDiscreteSeriesReal& l) {
            std::string out = "pi_Lambda(";
            for (std::size_t i = 0; i < l.lowest_doubled.size(); ++i) {
              if (i) out += ",";
              out += half(l.lowest_doubled[i]);
            }
            return out + ")";
          },
          [](const DirectSum& s) {
            std::string out;
            for (std::size_t i = 0; i < s.items.size(); ++i) {
              if (i) out += " (+) ";
              out += render(s.items[i]);
            }
            return out;
          },
          [](const Named& n) { return n.name; },
      },
      d.node);
}

bool equivalent(const RepDescriptor& a, const RepDescriptor& b) {
  return render(normalize(a)) == render(normalize(b));
}

}  // namespace mp4
