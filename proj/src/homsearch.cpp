#include "rackkit/homsearch.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "rackkit/errors.hpp"
#include "rackkit/functors.hpp"

namespace rackkit {

namespace {

using Map = std::vector<int>;

Map compose_maps(const Map& outer, const Map& inner) {
  Map out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

bool maps_commute(const Map& phi, const Map& component_src, const Map& component_tgt) {
  // phi o component_src == component_tgt o phi on the source universe.
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[component_src[x]] != component_tgt[phi[x]]) return false;
  }
  return true;
}

}  // namespace

bool RackMorphism::commutes() const {
  if (static_cast<int>(map.size()) != source.order()) return false;
  const int n = source.order();
  const int m = target.order();
  for (int v : map) {
    if (v < 0 || v >= m) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (map[source.at(x, y)] != target.at(map[x], map[y])) return false;
    }
  }
  return true;
}

std::vector<RackMorphism> homs(const FiniteRack& source, const FiniteRack& target, int order_cap) {
  if (source.order() > order_cap || target.order() > order_cap) {
    throw CapExceeded("morphism search refused above order " + std::to_string(order_cap) +
                      " (got " + std::to_string(source.order()) + " -> " +
                      std::to_string(target.order()) + ")");
  }
  const int n = source.order();
  const int m = target.order();
  std::vector<RackMorphism> out;
  if (n == 0) {
    out.push_back(RackMorphism{source, target, {}});
    return out;
  }
  if (m == 0) return out;

  std::vector<int> map(n, -1);
  std::vector<int> trail;
  std::vector<int> queue;

  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      map[trail.back()] = -1;
      trail.pop_back();
    }
  };

  // Fixing images of x and y forces the image of x |> y.
  auto propagate = [&](int start) -> bool {
    queue.clear();
    queue.push_back(start);
    while (!queue.empty()) {
      const int a = queue.back();
      queue.pop_back();
      for (int b = 0; b < n; ++b) {
        if (map[b] < 0) continue;
        const int passes = (a == b) ? 1 : 2;
        for (int pick = 0; pick < passes; ++pick) {
          const int x = pick == 0 ? a : b;
          const int y = pick == 0 ? b : a;
          const int z = source.at(x, y);
          const int w = target.at(map[x], map[y]);
          if (map[z] < 0) {
            map[z] = w;
            trail.push_back(z);
            queue.push_back(z);
          } else if (map[z] != w) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void()> search = [&]() {
    int pos = -1;
    for (int x = 0; x < n; ++x) {
      if (map[x] < 0) {
        pos = x;
        break;
      }
    }
    if (pos < 0) {
      out.push_back(RackMorphism{source, target, map});
      return;
    }
    for (int v = 0; v < m; ++v) {
      const std::size_t mark = trail.size();
      map[pos] = v;
      trail.push_back(pos);
      if (propagate(pos)) search();
      undo_to(mark);
    }
  };
  search();
  std::sort(out.begin(), out.end(),
            [](const RackMorphism& a, const RackMorphism& b) { return a.map < b.map; });
  return out;
}

bool check_F_naturality(const RackMorphism& phi) {
  const Permutation f_src = canonical_automorphism(phi.source);
  const Permutation f_tgt = canonical_automorphism(phi.target);
  for (int x = 0; x < phi.source.order(); ++x) {
    if (phi.map[f_src(x)] != f_tgt(phi.map[x])) return false;
  }
  return true;
}

std::vector<Permutation> inner_group(const FiniteRack& rack) {
  const int n = rack.order();
  std::set<Permutation> generators;
  for (int x = 0; x < n; ++x) {
    const Permutation t = left_translation(rack, x);
    generators.insert(t);
    generators.insert(t.inverse());
  }
  std::set<Permutation> members;
  std::vector<Permutation> frontier;
  members.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));
  while (!frontier.empty()) {
    const Permutation g = frontier.back();
    frontier.pop_back();
    for (const Permutation& h : generators) {
      Permutation next = compose(h, g);
      if (members.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {members.begin(), members.end()};
}

NaturalFamily identity_family(const std::vector<FiniteRack>& objects) {
  NaturalFamily family;
  family.components.reserve(objects.size());
  for (const FiniteRack& obj : objects) {
    family.components.push_back(Permutation::identity(obj.order()).images());
  }
  return family;
}

NaturalFamily compose_families(const NaturalFamily& outer, const NaturalFamily& inner) {
  if (outer.components.size() != inner.components.size()) {
    throw std::invalid_argument("family composition needs matching object lists");
  }
  NaturalFamily family;
  family.components.reserve(outer.components.size());
  for (std::size_t i = 0; i < outer.components.size(); ++i) {
    if (outer.components[i].size() != inner.components[i].size()) {
      throw std::invalid_argument("family composition needs matching object lists");
    }
    family.components.push_back(compose_maps(outer.components[i], inner.components[i]));
  }
  return family;
}

std::vector<NaturalFamily> natural_center(const std::vector<FiniteRack>& objects, int order_cap) {
  for (const FiniteRack& obj : objects) {
    if (obj.order() > order_cap) {
      throw CapExceeded("natural center refused above order " + std::to_string(order_cap) +
                        " (got an object of order " + std::to_string(obj.order()) + ")");
    }
  }
  const int k = static_cast<int>(objects.size());
  if (k == 0) return {NaturalFamily{}};

  // homsets[i][j]: every morphism objects[i] -> objects[j].
  std::vector<std::vector<std::vector<Map>>> homsets(k, std::vector<std::vector<Map>>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (const RackMorphism& phi : homs(objects[i], objects[j], order_cap)) {
        homsets[i][j].push_back(phi.map);
      }
    }
  }

  // Component candidates: endomorphisms already commuting with every
  // endomorphism of their own object.
  std::vector<std::vector<Map>> domains(k);
  for (int i = 0; i < k; ++i) {
    for (const Map& c : homsets[i][i]) {
      bool ok = true;
      for (const Map& phi : homsets[i][i]) {
        if (compose_maps(phi, c) != compose_maps(c, phi)) {
          ok = false;
          break;
        }
      }
      if (ok) domains[i].push_back(c);
    }
  }

  std::vector<NaturalFamily> out;
  std::vector<Map> chosen(k);
  std::function<void(int, std::vector<std::vector<Map>>)> go =
      [&](int i, std::vector<std::vector<Map>> dom) {
        if (i == k) {
          NaturalFamily family;
          family.components = chosen;
          out.push_back(std::move(family));
          return;
        }
        for (const Map& c : dom[i]) {
          chosen[i] = c;
          std::vector<std::vector<Map>> next = dom;
          bool dead = false;
          for (int j = i + 1; j < k && !dead; ++j) {
            std::vector<Map> kept;
            for (const Map& d : next[j]) {
              bool ok = true;
              for (const Map& phi : homsets[i][j]) {
                if (!maps_commute(phi, c, d)) {
                  ok = false;
                  break;
                }
              }
              if (ok) {
                for (const Map& phi : homsets[j][i]) {
                  if (!maps_commute(phi, d, c)) {
                    ok = false;
                    break;
                  }
                }
              }
              if (ok) kept.push_back(d);
            }
            if (kept.empty()) dead = true;
            next[j] = std::move(kept);
          }
          if (!dead) go(i + 1, std::move(next));
        }
      };
  go(0, domains);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> family_composition_table(const std::vector<NaturalFamily>& families) {
  std::vector<std::vector<int>> table(families.size(), std::vector<int>(families.size(), -1));
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (std::size_t j = 0; j < families.size(); ++j) {
      const NaturalFamily composed = compose_families(families[i], families[j]);
      const auto it = std::find(families.begin(), families.end(), composed);
      if (it == families.end()) {
        throw std::invalid_argument("family list is not closed under composition");
      }
      table[i][j] = static_cast<int>(it - families.begin());
    }
  }
  return table;
}

NaturalFamily canonical_automorphism_family(const std::vector<FiniteRack>& objects) {
  NaturalFamily family;
  family.components.reserve(objects.size());
  for (const FiniteRack& obj : objects) {
    family.components.push_back(canonical_automorphism(obj).images());
  }
  return family;
}

long long canonical_automorphism_family_order(const std::vector<FiniteRack>& objects) {
  long long order = 1;
  for (const FiniteRack& obj : objects) {
    order = std::lcm(order, canonical_automorphism(obj).order());
  }
  return order;
}

}  // namespace rackkit
