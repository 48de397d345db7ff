#include "mp4/ktypes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "mp4/error.hpp"

namespace mp4 {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string half(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

bool decreasing_nonnegative(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i && v[i] > v[i - 1]) return false;
  }
  return true;
}

Error not_in_harmonics(const std::string& what) {
  return validation_error("NotInHarmonics", what);
}

Error uncatalogued(const std::string& what) {
  return unsupported_error("UncataloguedShape", what);
}

}  // namespace

KTypeMp ktype_mp(std::initializer_list<Rational> weights) {
  KTypeMp mu;
  for (const Rational& w : weights) {
    const Rational d = w * 2;
    if (d.denominator() != 1) throw validation_error("InvalidKType", "weight not in (1/2)Z");
    mu.doubled.push_back(static_cast<int>(d.numerator()));
  }
  return mu;
}

std::string to_string(const KTypeO& mu) {
  return "(" + join_ints(mu.a) + ";" + to_string(mu.eps) + ")x(" + join_ints(mu.b) + ";" +
         to_string(mu.delta) + ")";
}

std::string to_string(const KTypeMp& mu) {
  std::string out = "(";
  for (std::size_t i = 0; i < mu.doubled.size(); ++i) {
    if (i) out += ",";
    out += half(mu.doubled[i]);
  }
  return out + ")";
}

void validate(const KTypeO& mu) {
  if (mu.p < 0 || mu.q < 0 || (mu.p + mu.q) % 2 == 0) {
    throw validation_error("InvalidKType", "need p, q >= 0 with p + q odd");
  }
  if (static_cast<int>(mu.a.size()) != mu.p / 2 || static_cast<int>(mu.b.size()) != mu.q / 2) {
    throw validation_error("InvalidKType", "weight vectors must have lengths floor(p/2), floor(q/2)");
  }
  if (!decreasing_nonnegative(mu.a) || !decreasing_nonnegative(mu.b)) {
    throw validation_error("InvalidKType", "weights must be weakly decreasing and nonnegative");
  }
}

void validate(const KTypeMp& mu) {
  for (std::size_t i = 0; i < mu.doubled.size(); ++i) {
    if (std::abs(mu.doubled[i]) % 2 != 1) {
      throw validation_error("InvalidKType", "genuine K'-types have half-odd entries");
    }
    if (i && mu.doubled[i] > mu.doubled[i - 1]) {
      throw validation_error("InvalidKType", "K'-type weights must be weakly decreasing");
    }
  }
}

int support(const std::vector<int>& weights) {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int x) { return x != 0; }));
}

KTypeO canonical(KTypeO mu) {
  auto fix = [](int n, const std::vector<int>& w, Sign& s) {
    if (n == 0) s = Sign::plus;
    if (n > 0 && n % 2 == 0 && !w.empty() && w.back() > 0) s = Sign::plus;
  };
  fix(mu.p, mu.a, mu.eps);
  fix(mu.q, mu.b, mu.delta);
  return mu;
}

int k_prime(const KTypeO& mu) {
  const KTypeO c = canonical(mu);
  return c.eps == Sign::plus ? 0 : c.p - 2 * support(c.a);
}

int l_prime(const KTypeO& mu) {
  const KTypeO c = canonical(mu);
  return c.delta == Sign::plus ? 0 : c.q - 2 * support(c.b);
}

int degree_o(const KTypeO& mu) {
  validate(mu);
  return std::accumulate(mu.a.begin(), mu.a.end(), 0) +
         std::accumulate(mu.b.begin(), mu.b.end(), 0) + k_prime(mu) + l_prime(mu);
}

int degree_mp(const KTypeMp& mu, int p, int q) {
  validate(mu);
  int total = 0;
  for (int d : mu.doubled) {
    const int shifted = d - (p - q);
    if (shifted % 2 != 0) throw validation_error("InvalidKType", "K'-type does not match (p, q)");
    total += std::abs(shifted / 2);
  }
  return total;
}

KTypeMp joint_harmonics(const KTypeO& mu, int n) {
  validate(mu);
  const int k = support(mu.a);
  const int l = support(mu.b);
  const int kp = k_prime(mu);
  const int lp = l_prime(mu);
  if (k + kp + l + lp > n) {
    throw not_in_harmonics(to_string(mu) + " needs rank at least " +
                           std::to_string(k + kp + l + lp) + ", got " + std::to_string(n));
  }
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  int pos = 0;
  for (int i = 0; i < k; ++i) entries[pos++] = mu.a[i];
  for (int i = 0; i < kp; ++i) entries[pos++] = 1;
  int back = n - 1;
  for (int j = 0; j < l; ++j) entries[back--] = -mu.b[j];
  for (int j = 0; j < lp; ++j) entries[back--] = -1;
  KTypeMp out;
  for (int e : entries) out.doubled.push_back(2 * e + (mu.p - mu.q));
  return out;
}

KTypeO joint_harmonics_inverse(const KTypeMp& mu, int p, int q) {
  validate(mu);
  std::vector<int> c;
  for (int d : mu.doubled) {
    const int shifted = d - (p - q);
    if (shifted % 2 != 0) throw not_in_harmonics(to_string(mu) + " does not match (p, q)");
    c.push_back(shifted / 2);
  }
  // One side of the decoding: the leading positive entries (or trailing
  // negated negative entries) give the weight vector and ε.
  auto decode = [](std::vector<int> side, int dim, std::vector<int>& weights, Sign& s) {
    const int half_dim = dim / 2;
    const int m = static_cast<int>(side.size());
    weights.assign(static_cast<std::size_t>(half_dim), 0);
    if (m <= half_dim) {
      s = Sign::plus;
      std::copy(side.begin(), side.end(), weights.begin());
      return true;
    }
    const int k = dim - m;
    if (k < 0 || k > half_dim) return false;
    if (!std::all_of(side.begin() + k, side.end(), [](int x) { return x == 1; })) return false;
    s = Sign::minus;
    std::copy(side.begin(), side.begin() + k, weights.begin());
    return true;
  };
  std::vector<int> positive;
  std::vector<int> negative;
  for (int x : c) {
    if (x > 0) positive.push_back(x);
  }
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (*it < 0) negative.push_back(-*it);
  }
  KTypeO out;
  out.p = p;
  out.q = q;
  if (!decode(positive, p, out.a, out.eps) || !decode(negative, q, out.b, out.delta)) {
    throw not_in_harmonics(to_string(mu) + " is not matched with any O(" + std::to_string(p) +
                           ")xO(" + std::to_string(q) + ")-type");
  }
  out = canonical(out);
  validate(out);
  if (joint_harmonics(out, static_cast<int>(c.size())) != mu) {
    throw not_in_harmonics(to_string(mu) + " is not in the joint harmonics");
  }
  return out;
}

KTypeMp lowest_discrete_series(int a2, int b2, Sign e1, Sign e2) {
  if (a2 % 2 == 0 || b2 % 2 == 0 || b2 <= 0 || a2 < b2) {
    throw uncatalogued("discrete series catalog needs half-odd a >= b > 0");
  }
  if (a2 == b2) {
    if (e1 != e2) throw uncatalogued("limit of discrete series with a = b has no mixed labels");
    return e1 == Sign::plus ? KTypeMp{{a2 + 2, -a2}} : KTypeMp{{a2, -a2 - 2}};
  }
  if (e1 == Sign::plus && e2 == Sign::plus) return {{a2 + 2, -b2}};
  if (e1 == Sign::plus) return {{a2 + 2, b2 + 4}};
  if (e2 == Sign::plus) return {{-b2 - 4, -a2 - 2}};
  return {{b2, -a2 - 2}};
}

KTypeMp lowest_jp1(int a2, Sign chi_minus_one) {
  if (a2 % 2 == 0) throw uncatalogued("J_P1 catalog needs a half-odd weight");
  if (a2 > 0) return chi_minus_one == Sign::plus ? KTypeMp{{a2 + 2, 1}} : KTypeMp{{a2 + 2, 3}};
  return chi_minus_one == Sign::plus ? KTypeMp{{-3, a2 - 2}} : KTypeMp{{-1, a2 - 2}};
}

std::vector<KTypeMp> lowest_jp2(int a2) {
  if (a2 <= 0) throw uncatalogued("J_P2 catalog needs a > 0");
  if (a2 % 2 == 0) return {{{a2 + 1, -a2 - 1}}};
  return {{{a2 + 2, -a2}}, {{a2, -a2 - 2}}};
}

KTypeMp lowest_jb(Sign e1, Sign e2) {
  if (e1 == Sign::plus && e2 == Sign::plus) return {{1, 1}};
  if (e1 == Sign::minus && e2 == Sign::minus) return {{-1, -1}};
  return {{1, -1}};
}

}  // namespace mp4
