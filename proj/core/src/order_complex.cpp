#include "sheafres/order_complex.hpp"

#include <algorithm>

#include "sheafres/errors.hpp"

namespace sheafres {

namespace {

void extend_chains(const Poset& poset, const std::vector<bool>& member, Chain& current, std::size_t max_len,
                   std::vector<std::vector<Chain>>& out) {
  out[current.size() - 1].push_back(current);
  if (current.size() == max_len) return;
  const auto& above = poset.star(current.back());
  for (ElementId next : above) {
    if (next == current.back() || !member[next]) continue;
    current.push_back(next);
    extend_chains(poset, member, current, max_len, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<std::size_t> OrderComplex::index_of(const Chain& c) const {
  if (c.empty() || c.size() > chains.size()) return std::nullopt;
  const auto& level = chains[c.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

int OrderComplex::incidence(const Chain& c, const Chain& d) const {
  if (d.size() != c.size() + 1) return 0;
  // d must equal c with exactly one element inserted
  std::size_t i = 0;
  while (i < c.size() && c[i] == d[i]) ++i;
  if (!std::equal(c.begin() + static_cast<std::ptrdiff_t>(i), c.end(), d.begin() + static_cast<std::ptrdiff_t>(i) + 1)) {
    return 0;
  }
  return i % 2 == 0 ? 1 : -1;
}

OrderComplex order_complex(const Poset& poset, std::size_t max_degree, std::span<const ElementId> members) {
  std::vector<bool> member(poset.size(), members.empty());
  for (ElementId e : members) {
    if (e >= poset.size()) throw LookupError("order complex: unknown element");
    member[e] = true;
  }
  const std::size_t levels = max_degree + 1;
  OrderComplex oc;
  oc.chains.assign(levels, {});
  Chain current;
  for (ElementId e = 0; e < poset.size(); ++e) {
    if (!member[e]) continue;
    current.assign(1, e);
    extend_chains(poset, member, current, levels, oc.chains);
  }
  for (auto& level : oc.chains) std::sort(level.begin(), level.end());
  while (oc.chains.size() > 1 && oc.chains.back().empty()) oc.chains.pop_back();

  oc.cofaces.assign(oc.chains.size(), {});
  for (std::size_t deg = 0; deg < oc.chains.size(); ++deg) {
    oc.cofaces[deg].assign(oc.chains[deg].size(), {});
    if (deg + 1 == oc.chains.size()) continue;
    for (std::size_t idx = 0; idx < oc.chains[deg].size(); ++idx) {
      const Chain& c = oc.chains[deg][idx];
      auto& cof = oc.cofaces[deg][idx];
      for (std::size_t pos = 0; pos <= c.size(); ++pos) {
        // candidates strictly between c[pos-1] and c[pos]
        for (ElementId x = 0; x < poset.size(); ++x) {
          if (!member[x]) continue;
          if (pos > 0 && !poset.less(c[pos - 1], x)) continue;
          if (pos < c.size() && !poset.less(x, c[pos])) continue;
          Chain d = c;
          d.insert(d.begin() + static_cast<std::ptrdiff_t>(pos), x);
          auto j = oc.index_of(d);
          if (!j) throw InternalError("order complex: missing extended chain");
          cof.emplace_back(*j, pos % 2 == 0 ? 1 : -1);
        }
      }
      std::sort(cof.begin(), cof.end());
    }
  }
  return oc;
}

}  // namespace sheafres
