#include "quandle/group_table.hpp"

#include <algorithm>

#include "quandle/error.hpp"

namespace quandle {

GroupTable GroupTable::from_table(Table const& table, std::string label) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw NotAGroup("empty multiplication table");
  }
  GroupTable g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.table_.reserve(n * n);
  for (auto const& row : table) {
    if (row.size() != n) {
      throw NotAGroup("multiplication table is not square");
    }
    for (Element v : row) {
      if (v >= n) {
        throw NotAGroup("product out of range");
      }
      g.table_.push_back(v);
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
          throw NotAGroup("not associative at (" + std::to_string(x) + ","
                          + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    found = true;
    for (Element x = 0; x < n && found; ++x) {
      found = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (found) {
      g.identity_ = e;
    }
  }
  if (!found) {
    throw NotAGroup("no identity element");
  }
  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < n && !has_inverse; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        has_inverse = true;
      }
    }
    if (!has_inverse) {
      throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }
  }
  return g;
}

Element GroupTable::power(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  Element result = identity_;
  while (k > 0) {
    if (k & 1) {
      result = mul(result, x);
    }
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

Table GroupTable::table() const {
  Table out(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    out[x].assign(table_.begin() + x * order_, table_.begin() + (x + 1) * order_);
  }
  return out;
}

std::vector<ElementSet> GroupTable::conjugacy_classes() const {
  std::vector<char> seen(order_, 0);
  std::vector<ElementSet> out;
  for (Element x = 0; x < order_; ++x) {
    if (seen[x]) {
      continue;
    }
    ElementSet cls;
    for (Element g = 0; g < order_; ++g) {
      Element const y = mul(mul(inverse(g), x), g);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace quandle
