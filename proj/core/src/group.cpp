#include "cob2/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <utility>

#include "cob2/errors.hpp"
#include "json.hpp"

namespace cob2 {

namespace {

FiniteGroup from_multiplication(std::size_t order,
                                const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                std::vector<std::string> names) {
  std::vector<std::size_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = mul(a, b);
  }
  return FiniteGroup(order, std::move(table), 0, std::move(names));
}

// Permutations of {0, 1, 2} in lexicographic order; index 0 is the identity.
FiniteGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  auto cycle_name = [](const std::array<int, 3>& q) {
    std::string out;
    std::array<bool, 3> seen{};
    for (int start = 0; start < 3; ++start) {
      if (seen[start] || q[start] == start) continue;
      out += "(";
      for (int x = start; !seen[x]; x = q[x]) {
        seen[x] = true;
        out += std::to_string(x + 1);
      }
      out += ")";
    }
    return out.empty() ? std::string("e") : out;
  };

  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  // (a * b)(x) = a(b(x)): apply b first.
  return from_multiplication(
      6,
      [&](std::size_t a, std::size_t b) {
        std::array<int, 3> r{};
        for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
        return index_of(r);
      },
      std::move(names));
}

// Symmetries of the square: index f * 4 + k stands for r^k s^f.
FiniteGroup dihedral4() {
  std::vector<std::string> names{"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  return from_multiplication(
      8,
      [](std::size_t x, std::size_t y) {
        const std::size_t a = x % 4, f = x / 4, b = y % 4, h = y / 4;
        const std::size_t k = f == 0 ? (a + b) % 4 : (a + 4 - b) % 4;
        return (f ^ h) * 4 + k;
      },
      std::move(names));
}

// Quaternion units: index s * 4 + u stands for (-1)^s u with u in {1, i, j, k}.
FiniteGroup quaternion8() {
  // unit_product[u][v] = {sign, unit} of u * v.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_product{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::string> names{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return from_multiplication(
      8,
      [](std::size_t x, std::size_t y) {
        const auto [s, u] = unit_product[x % 4][y % 4];
        const std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(s)) % 2;
        return sign * 4 + static_cast<std::size_t>(u);
      },
      std::move(names));
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
  if (order_ == 0) throw InvalidGroupTable("group order must be at least 1");
  if (table_.size() != order_ * order_) {
    throw InvalidGroupTable("table has " + std::to_string(table_.size()) + " entries, expected " +
                            std::to_string(order_ * order_));
  }
  if (identity_ >= order_) throw InvalidGroupTable("identity index out of range");
  for (std::size_t v : table_) {
    if (v >= order_) throw InvalidGroupTable("table entry " + std::to_string(v) + " out of range");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) names_.push_back("g" + std::to_string(i));
  } else if (names_.size() != order_) {
    throw InvalidGroupTable("expected " + std::to_string(order_) + " names");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (multiply(identity_, a) != a || multiply(a, identity_) != a) {
      throw InvalidGroupTable("element " + std::to_string(identity_) + " is not an identity");
    }
  }
  inverses_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverses_[a] = b;
        break;
      }
    }
    if (inverses_[a] == order_) {
      throw InvalidGroupTable("element " + std::to_string(a) + " has no inverse");
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      const std::size_t ab = multiply(a, b);
      for (std::size_t c = 0; c < order_; ++c) {
        if (multiply(ab, c) != multiply(a, multiply(b, c))) {
          throw InvalidGroupTable("multiplication is not associative at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  return from_multiplication(
      n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, std::move(names));
}

FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  std::vector<std::size_t> table(g.order() * m * g.order() * m);
  std::vector<std::string> names;
  const std::size_t order = g.order() * m;
  for (std::size_t x = 0; x < order; ++x) {
    names.push_back("(" + g.name(x / m) + "," + h.name(x % m) + ")");
    for (std::size_t y = 0; y < order; ++y) {
      table[x * order + y] = g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
    }
  }
  return FiniteGroup(order, std::move(table), g.identity() * m + h.identity(), std::move(names));
}

FiniteGroup builtin(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  throw UnknownGroupName(std::string(name));
}

FiniteGroup group_by_name(std::string_view name) {
  const auto cross = name.find('x');
  if (cross != std::string_view::npos) {
    return product(group_by_name(name.substr(0, cross)), group_by_name(name.substr(cross + 1)));
  }
  if (name.size() >= 2 && name.front() == 'C') {
    std::size_t n = 0;
    const auto digits = name.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1 && n <= 4096) {
      return cyclic(n);
    }
    throw UnknownGroupName(std::string(name));
  }
  return builtin(name);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const std::size_t y = g.multiply(g.multiply(h, x), g.inverse(h));
      if (!assigned[y]) {
        assigned[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  const auto identity_class =
      std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
        return c.front() == g.identity();
      });
  std::rotate(classes.begin(), identity_class, identity_class + 1);
  return classes;
}

FiniteGroup group_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("group JSON: ") + e.what());
  }
  try {
    const auto order = doc.at("order").get<std::size_t>();
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != order) {
      throw FormatError("group JSON: 'table' must have " + std::to_string(order) + " rows");
    }
    std::vector<std::size_t> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != order) {
        throw FormatError("group JSON: every table row needs " + std::to_string(order) + " entries");
      }
      for (const auto& v : row) table.push_back(v.get<std::size_t>());
    }
    const auto identity = doc.at("identity").get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return FiniteGroup(order, std::move(table), identity, std::move(names));
  } catch (const json::exception& e) {
    throw FormatError(std::string("group JSON: ") + e.what());
  }
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.multiply(a, b));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"order", g.order()},
                        {"table", std::move(rows)},
                        {"identity", g.identity()},
                        {"names", g.names()}};
  return doc.dump(2);
}

}  // namespace cob2
