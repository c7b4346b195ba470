#include "bent/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <random>
#include <utility>

#include "bent/error.hpp"

namespace bent {

namespace {

void check_order(int n) {
  if (n < 1) throw InvalidInput("group order must be positive, got " + std::to_string(n));
  if (n > kMaxGroupOrder) {
    throw InvalidInput("group order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxGroupOrder));
  }
}

}  // namespace

bool check_associative(int order, std::span<const int> cayley, int samples, std::uint64_t seed) {
  const auto n = static_cast<size_t>(order);
  auto mul = [&](size_t a, size_t b) { return static_cast<size_t>(cayley[a * n + b]); };
  if (order <= 32) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        const size_t ab = mul(a, b);
        for (size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const size_t a = rng() % n, b = rng() % n, c = rng() % n;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

Group Group::FromCayley(std::string name, int order, std::vector<int> cayley, int identity,
                        std::vector<std::string> labels) {
  check_order(order);
  const auto n = static_cast<size_t>(order);
  if (cayley.size() != n * n) {
    throw InvalidInput("Cayley table has " + std::to_string(cayley.size()) + " entries, expected " +
                       std::to_string(n * n));
  }
  for (int v : cayley)
    if (v < 0 || v >= order) throw InvalidInput("Cayley table entry out of range: " + std::to_string(v));
  if (identity < 0 || identity >= order) throw InvalidInput("identity index out of range");
  if (!labels.empty() && labels.size() != n) throw InvalidInput("label count does not match order");

  Group g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.identity_ = identity;
  g.cayley_ = std::move(cayley);

  for (int x = 0; x < order; ++x) {
    if (g.mul(identity, x) != x || g.mul(x, identity) != x) {
      throw InvalidInput("element " + std::to_string(identity) + " is not a two-sided identity");
    }
  }
  g.inverse_.assign(n, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inverse_[x] = y;
        break;
      }
    }
    if (g.inverse_[x] < 0) throw InvalidInput("element " + std::to_string(x) + " has no inverse");
  }
  if (!check_associative(order, g.cayley_)) throw InvalidInput("Cayley table is not associative");

  g.abelian_ = true;
  for (int a = 0; a < order && g.abelian_; ++a)
    for (int b = a + 1; b < order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }

  g.classes_ = conjugacy_classes(g);
  g.class_of_.assign(n, 0);
  for (size_t c = 0; c < g.classes_.size(); ++c) {
    g.class_reps_.push_back(g.classes_[c].front());
    g.class_sizes_.push_back(static_cast<int>(g.classes_[c].size()));
    for (int x : g.classes_[c]) g.class_of_[x] = static_cast<int>(c);
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (int x = 0; x < order; ++x) labels.push_back(std::to_string(x));
  }
  g.labels_ = std::move(labels);

  g.exponent_ = 1;
  for (int x = 0; x < order; ++x) g.exponent_ = std::lcm(g.exponent_, g.element_order(x));
  return g;
}

int Group::multiply(int a, int b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_) {
    throw IndexError("element index out of range for group " + name_ + ": (" + std::to_string(a) +
                     ", " + std::to_string(b) + ")");
  }
  return mul(a, b);
}

int Group::inverse(int a) const {
  if (a < 0 || a >= order_) throw IndexError("element index out of range: " + std::to_string(a));
  return inverse_[a];
}

int Group::element_order(int x) const {
  int k = 1;
  for (int p = x; p != identity_; p = mul(p, x)) ++k;
  return k;
}

std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int h = 0; h < n; ++h)
    for (int y = 0; y < n; ++y)
      if (g.mul(h, y) == g.identity()) {
        inv[h] = y;
        break;
      }

  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  auto orbit = [&](int x) {
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int c = g.mul(g.mul(h, x), inv[h]);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  };
  orbit(g.identity());
  for (int x = 0; x < n; ++x)
    if (!seen[x]) orbit(x);
  return out;
}

Group make_cyclic(int n) {
  check_order(n);
  return make_abelian({n});
}

Group make_abelian(const std::vector<int>& factors) {
  if (factors.empty()) throw InvalidInput("make_abelian needs at least one factor");
  long long total = 1;
  for (int f : factors) {
    if (f < 1) throw InvalidInput("cyclic factor must be positive, got " + std::to_string(f));
    total *= f;
    if (total > kMaxGroupOrder) {
      throw InvalidInput("product order exceeds the supported maximum " + std::to_string(kMaxGroupOrder));
    }
  }
  const int n = static_cast<int>(total);
  const size_t k = factors.size();

  auto decode = [&](int x) {
    std::vector<int> t(k);
    for (size_t j = k; j-- > 0;) {
      t[j] = x % factors[j];
      x /= factors[j];
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int x = 0;
    for (size_t j = 0; j < k; ++j) x = x * factors[j] + t[j];
    return x;
  };

  std::vector<int> cayley(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    const auto ta = decode(a);
    for (int b = 0; b < n; ++b) {
      auto tb = decode(b);
      for (size_t j = 0; j < k; ++j) tb[j] = (ta[j] + tb[j]) % factors[j];
      cayley[static_cast<size_t>(a) * n + b] = encode(tb);
    }
    if (k == 1) {
      labels[a] = std::to_string(a);
    } else {
      std::string s = "(";
      for (size_t j = 0; j < k; ++j) s += (j ? "," : "") + std::to_string(ta[j]);
      labels[a] = s + ")";
    }
  }

  std::string name;
  for (size_t j = 0; j < k; ++j) name += (j ? "xZ" : "Z") + std::to_string(factors[j]);
  Group g = Group::FromCayley(name, n, std::move(cayley), 0, std::move(labels));
  g.factors_ = factors;
  return g;
}

namespace {

Group symmetric3() {
  // Images of the symbols 1,2,3 (stored 0-based); product is composition
  // (a*b)(x) = a(b(x)).
  const std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<int> cayley(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> p{};
      for (int x = 0; x < 3; ++x) p[x] = perms[a][perms[b][x]];
      cayley[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  return Group::FromCayley("S3", 6, std::move(cayley), 0,
                           {"I", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

Group quaternion8() {
  // Index = 2*unit + negative, unit in {1, i, j, k}.
  struct Unit {
    int unit;
    int sign;
  };
  const Unit table[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  std::vector<int> cayley(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const Unit u = table[a / 2][b / 2];
      const int sign = u.sign * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      cayley[a * 8 + b] = 2 * u.unit + (sign < 0 ? 1 : 0);
    }
  return Group::FromCayley("Q8", 8, std::move(cayley), 0,
                           {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

Group dihedral8() {
  // Index = k + 4m for r^k s^m, with s r = r^-1 s.
  std::vector<int> cayley(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ka = a % 4, ma = a / 4, kb = b % 4, mb = b / 4;
      const int k = ((ka + (ma ? -kb : kb)) % 4 + 4) % 4;
      cayley[a * 8 + b] = k + 4 * ((ma + mb) % 2);
    }
  return Group::FromCayley("D4", 8, std::move(cayley), 0,
                           {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

}  // namespace

Group make_named(const std::string& name) {
  Group g;
  if (name == "S3") {
    g = symmetric3();
  } else if (name == "Q8") {
    g = quaternion8();
  } else if (name == "D4") {
    g = dihedral8();
    g.exploratory_ = true;
  } else if (name == "V4") {
    g = make_abelian({2, 2});
    g.name_ = "V4";
  } else {
    throw CatalogError("unknown group '" + name + "' (catalog: S3, Q8, V4, D4)");
  }
  g.catalog_name_ = name;
  return g;
}

Group group_from_label(const std::string& label) {
  if (label == "S3" || label == "Q8" || label == "V4" || label == "D4") return make_named(label);
  // Z<n> or Z<n1>xZ<n2>...
  std::vector<int> factors;
  size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] != 'Z') break;
    size_t end = pos + 1;
    while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
    if (end == pos + 1 || end - pos > 5) break;
    factors.push_back(std::stoi(label.substr(pos + 1, end - pos - 1)));
    pos = end;
    if (pos == label.size()) {
      if (factors.size() == 1) return make_cyclic(factors[0]);
      return make_abelian(factors);
    }
    if (label[pos] != 'x') break;
    ++pos;
  }
  throw CatalogError("unknown group label '" + label + "' (use Z<n>, Z<a>xZ<b>, S3, Q8, V4, D4)");
}

}  // namespace bent
