#include "rackkit/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "rackkit/errors.hpp"
#include "rackkit/permutation.hpp"

namespace rackkit {

namespace {

struct PermPool {
  int n = 0;
  std::vector<std::vector<int>> perms;  // lex order, identity first
  std::vector<std::vector<int>> inverses;
};

PermPool build_perm_pool(int n) {
  PermPool pool;
  pool.n = n;
  for (const Permutation& p : all_permutations(n)) {
    pool.perms.push_back(p.images());
    pool.inverses.push_back(p.inverse().images());
  }
  return pool;
}

bool is_involution_images(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[p[i]] != static_cast<int>(i)) return false;
  }
  return true;
}

// Whether the permutation may serve as row `x` under the kind constraints:
// quandles pin p[x] == x, involutary structures pin p to an involution.
bool row_allows_kind(const std::vector<int>& p, int x, StructureKind kind) {
  switch (kind) {
    case StructureKind::Rack:
      return true;
    case StructureKind::Quandle:
      return p[x] == x;
    case StructureKind::Involutary:
      return is_involution_images(p);
    case StructureKind::Kei:
      return p[x] == x && is_involution_images(p);
  }
  return false;
}

// Compares the relabeling of `table` by (p, pinv) against `ref`
// lexicographically: -1 smaller, 0 equal, +1 greater. Entry (x, y) of the
// relabeled table is p[table[pinv[x]][pinv[y]]].
int compare_relabeled(int n, const std::vector<int>& table, const std::vector<int>& ref,
                      const std::vector<int>& p, const std::vector<int>& pinv) {
  for (int x = 0; x < n; ++x) {
    const int* src = &table[static_cast<std::size_t>(pinv[x]) * n];
    const int* cur = &ref[static_cast<std::size_t>(x) * n];
    for (int y = 0; y < n; ++y) {
      const int v = p[src[pinv[y]]];
      if (v != cur[y]) return v < cur[y] ? -1 : 1;
    }
  }
  return 0;
}

std::vector<int> relabel_table(int n, const std::vector<int>& table, const std::vector<int>& p,
                               const std::vector<int>& pinv) {
  std::vector<int> out(table.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out[static_cast<std::size_t>(x) * n + y] = p[table[static_cast<std::size_t>(pinv[x]) * n + pinv[y]]];
    }
  }
  return out;
}

std::vector<int> min_relabeling(int n, const std::vector<int>& table, const PermPool& pool) {
  std::vector<int> best = table;
  for (std::size_t i = 1; i < pool.perms.size(); ++i) {
    if (compare_relabeled(n, table, best, pool.perms[i], pool.inverses[i]) < 0) {
      best = relabel_table(n, table, pool.perms[i], pool.inverses[i]);
    }
  }
  return best;
}

bool table_is_canonical(int n, const std::vector<int>& table, const PermPool& pool) {
  for (std::size_t i = 1; i < pool.perms.size(); ++i) {
    if (compare_relabeled(n, table, table, pool.perms[i], pool.inverses[i]) < 0) return false;
  }
  return true;
}

long long count_automorphisms(int n, const std::vector<int>& table, const PermPool& pool) {
  long long count = 0;
  for (std::size_t i = 0; i < pool.perms.size(); ++i) {
    if (compare_relabeled(n, table, table, pool.perms[i], pool.inverses[i]) == 0) ++count;
  }
  return count;
}

// Depth-first completion of partial tables. Rows are whole permutations;
// assigning rows x and y forces row table[x][y] to be row_x o row_y o
// row_x^{-1}, which prunes most of the space before branching.
class CensusSearch {
 public:
  CensusSearch(int n, StructureKind kind, bool collect, bool orderly, const PermPool& pool,
               const std::vector<std::vector<int>>& row_candidates,
               const std::atomic<bool>* cancel)
      : n_(n),
        kind_(kind),
        collect_(collect),
        orderly_(orderly),
        pool_(pool),
        row_candidates_(row_candidates),
        cancel_(cancel),
        rows_(static_cast<std::size_t>(n) * n, 0),
        row_inv_(static_cast<std::size_t>(n) * n, 0),
        assigned_(n, 0),
        scratch_(n, 0) {}

  // Explores every completion with row 0 = row0 and, when row1 is given,
  // row 1 = *row1 (skipping the task when propagation forces row 1 to
  // something else). Returns false when cancelled.
  bool run_task(const std::vector<int>& row0, const std::vector<int>* row1) {
    std::fill(assigned_.begin(), assigned_.end(), 0);
    trail_.clear();
    assigned_count_ = 0;
    set_row(0, row0.data());
    if (propagate_from(0)) {
      if (row1 == nullptr) {
        search();
      } else if (assigned_[1]) {
        if (std::equal(row1->begin(), row1->end(), &rows_[static_cast<std::size_t>(n_)])) search();
      } else {
        set_row(1, row1->data());
        if (propagate_from(1)) search();
      }
    }
    return !cancelled_;
  }

  long long labeled = 0;
  long long visited = 0;
  std::set<std::vector<int>> reps;

 private:
  void set_row(int x, const int* p) {
    int* row = &rows_[static_cast<std::size_t>(x) * n_];
    int* inv = &row_inv_[static_cast<std::size_t>(x) * n_];
    for (int y = 0; y < n_; ++y) {
      row[y] = p[y];
      inv[p[y]] = y;
    }
    assigned_[x] = 1;
    trail_.push_back(x);
    ++assigned_count_;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = 0;
      trail_.pop_back();
      --assigned_count_;
    }
  }

  // Enforces row-conjugation for every ordered pair involving newly
  // assigned rows. Forced rows are kind-checked before being placed.
  bool propagate_from(int start) {
    queue_.clear();
    queue_.push_back(start);
    while (!queue_.empty()) {
      const int a = queue_.back();
      queue_.pop_back();
      for (int b = 0; b < n_; ++b) {
        if (!assigned_[b]) continue;
        const int passes = (a == b) ? 1 : 2;
        for (int pick = 0; pick < passes; ++pick) {
          const int x = pick == 0 ? a : b;
          const int y = pick == 0 ? b : a;
          const int z = rows_[static_cast<std::size_t>(x) * n_ + y];
          const int* rx = &rows_[static_cast<std::size_t>(x) * n_];
          const int* ry = &rows_[static_cast<std::size_t>(y) * n_];
          const int* rxi = &row_inv_[static_cast<std::size_t>(x) * n_];
          for (int i = 0; i < n_; ++i) scratch_[i] = rx[ry[rxi[i]]];
          if (assigned_[z]) {
            if (!std::equal(scratch_.begin(), scratch_.end(),
                            &rows_[static_cast<std::size_t>(z) * n_])) {
              return false;
            }
          } else {
            if (!row_allows_kind(scratch_, z, kind_)) return false;
            set_row(z, scratch_.data());
            queue_.push_back(z);
          }
        }
      }
    }
    return true;
  }

  // Sound prune for orderly mode: a relabeling p witnesses non-minimality
  // of every completion once the rows it needs are all assigned and the
  // relabeled prefix is strictly smaller.
  bool ruled_out_by_prefix() const {
    for (std::size_t i = 1; i < pool_.perms.size(); ++i) {
      const std::vector<int>& p = pool_.perms[i];
      const std::vector<int>& pinv = pool_.inverses[i];
      for (int x = 0; x < n_; ++x) {
        const int src = pinv[x];
        if (!assigned_[src] || !assigned_[x]) break;
        int verdict = 0;
        const int* srow = &rows_[static_cast<std::size_t>(src) * n_];
        const int* cur = &rows_[static_cast<std::size_t>(x) * n_];
        for (int y = 0; y < n_; ++y) {
          const int v = p[srow[pinv[y]]];
          if (v != cur[y]) {
            verdict = v < cur[y] ? -1 : 1;
            break;
          }
        }
        if (verdict < 0) return true;
        if (verdict > 0) break;
      }
    }
    return false;
  }

  void search() {
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
      cancelled_ = true;
      return;
    }
    if (assigned_count_ == n_) {
      on_leaf();
      return;
    }
    if (orderly_ && ruled_out_by_prefix()) return;
    int next = 0;
    while (assigned_[next]) ++next;
    for (const int ci : row_candidates_[next]) {
      const std::size_t mark = trail_.size();
      set_row(next, pool_.perms[ci].data());
      if (propagate_from(next)) search();
      undo_to(mark);
      if (cancelled_) return;
    }
  }

  void on_leaf() {
    ++visited;
    if (!collect_) {
      ++labeled;
      return;
    }
    if (orderly_) {
      // Labeled counts are recovered later from automorphism counts.
      if (table_is_canonical(n_, rows_, pool_)) reps.insert(rows_);
    } else {
      ++labeled;
      reps.insert(min_relabeling(n_, rows_, pool_));
    }
  }

  const int n_;
  const StructureKind kind_;
  const bool collect_;
  const bool orderly_;
  const PermPool& pool_;
  const std::vector<std::vector<int>>& row_candidates_;
  const std::atomic<bool>* cancel_;
  std::vector<int> rows_;
  std::vector<int> row_inv_;
  std::vector<char> assigned_;
  std::vector<int> scratch_;
  std::vector<int> queue_;
  std::vector<int> trail_;
  int assigned_count_ = 0;
  bool cancelled_ = false;
};

bool table_valid_direct(int n, const std::vector<int>& t) {
  for (int x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
      const int v = t[static_cast<std::size_t>(x) * n + y];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int lhs = t[static_cast<std::size_t>(x) * n + t[static_cast<std::size_t>(y) * n + z]];
        const int rhs = t[static_cast<std::size_t>(t[static_cast<std::size_t>(x) * n + y]) * n +
                          t[static_cast<std::size_t>(x) * n + z]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool table_has_kind_direct(int n, const std::vector<int>& t, StructureKind kind) {
  const bool need_quandle = kind == StructureKind::Quandle || kind == StructureKind::Kei;
  const bool need_involutary = kind == StructureKind::Involutary || kind == StructureKind::Kei;
  if (need_quandle) {
    for (int x = 0; x < n; ++x) {
      if (t[static_cast<std::size_t>(x) * n + x] != x) return false;
    }
  }
  if (need_involutary) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (t[static_cast<std::size_t>(x) * n + t[static_cast<std::size_t>(x) * n + y]] != y) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int census_order_cap(StructureKind kind) {
  switch (kind) {
    case StructureKind::Rack:
    case StructureKind::Involutary:
      return 6;
    case StructureKind::Quandle:
    case StructureKind::Kei:
      return 7;
  }
  return 0;
}

FiniteRack canonical_form(const FiniteRack& rack) {
  if (rack.order() > kCanonicalOrderCap) {
    throw CapExceeded("canonical form refused above order " + std::to_string(kCanonicalOrderCap) +
                      " (got " + std::to_string(rack.order()) + ")");
  }
  const PermPool pool = build_perm_pool(rack.order());
  return FiniteRack::unchecked(rack.order(), min_relabeling(rack.order(), rack.table(), pool));
}

bool is_canonical_form(const FiniteRack& rack) {
  if (rack.order() > kCanonicalOrderCap) {
    throw CapExceeded("canonical form refused above order " + std::to_string(kCanonicalOrderCap) +
                      " (got " + std::to_string(rack.order()) + ")");
  }
  const PermPool pool = build_perm_pool(rack.order());
  return table_is_canonical(rack.order(), rack.table(), pool);
}

bool are_isomorphic(const FiniteRack& a, const FiniteRack& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

long long automorphism_count(const FiniteRack& rack) {
  if (rack.order() > kCanonicalOrderCap) {
    throw CapExceeded("automorphism count refused above order " +
                      std::to_string(kCanonicalOrderCap) + " (got " +
                      std::to_string(rack.order()) + ")");
  }
  const PermPool pool = build_perm_pool(rack.order());
  return count_automorphisms(rack.order(), rack.table(), pool);
}

CensusRecord run_census(const SearchConfig& config) {
  const int n = config.order;
  if (n < 1) throw std::invalid_argument("census order must be at least 1");
  if (config.worker_count < 1) throw std::invalid_argument("worker count must be at least 1");
  const int cap = census_order_cap(config.kind);
  if (n > cap) {
    throw CapExceeded(std::string(kind_name(config.kind)) + " census refused above order " +
                      std::to_string(cap) + " (got " + std::to_string(n) + ")");
  }

  const PermPool pool = build_perm_pool(n);
  std::vector<std::vector<int>> row_candidates(n);
  for (int x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < pool.perms.size(); ++i) {
      if (row_allows_kind(pool.perms[i], x, config.kind)) {
        row_candidates[x].push_back(static_cast<int>(i));
      }
    }
  }

  const bool orderly = config.up_to_iso && config.orderly_override.value_or(n >= 6);

  // Tasks are the joint choices for row 0 (and row 1 when n >= 2); workers
  // claim them through a shared counter.
  const std::size_t span0 = row_candidates[0].size();
  const std::size_t span1 = n >= 2 ? row_candidates[1].size() : 1;
  const std::size_t task_count = span0 * span1;

  struct Partial {
    long long labeled = 0;
    long long visited = 0;
    std::set<std::vector<int>> reps;
  };

  const int worker_count =
      static_cast<int>(std::min<std::size_t>(config.worker_count, std::max<std::size_t>(task_count, 1)));
  std::vector<Partial> partials(worker_count);
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> saw_cancel{false};

  auto run_worker = [&](int w) {
    CensusSearch search(n, config.kind, config.up_to_iso, orderly, pool, row_candidates,
                        config.cancel);
    for (;;) {
      if (config.cancel != nullptr && config.cancel->load(std::memory_order_relaxed)) {
        saw_cancel.store(true, std::memory_order_relaxed);
        break;
      }
      const std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
      if (t >= task_count) break;
      const std::vector<int>& row0 = pool.perms[row_candidates[0][t / span1]];
      const std::vector<int>* row1 =
          n >= 2 ? &pool.perms[row_candidates[1][t % span1]] : nullptr;
      if (!search.run_task(row0, row1)) {
        saw_cancel.store(true, std::memory_order_relaxed);
        break;
      }
    }
    partials[w].labeled = search.labeled;
    partials[w].visited = search.visited;
    partials[w].reps = std::move(search.reps);
  };

  if (worker_count == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w) threads.emplace_back(run_worker, w);
    for (std::thread& t : threads) t.join();
  }

  if (saw_cancel.load()) {
    long long visited = 0;
    for (const Partial& p : partials) visited += p.visited;
    throw SearchInterrupted("census interrupted after visiting " + std::to_string(visited) +
                                " complete tables; partial results discarded",
                            visited);
  }

  CensusRecord record;
  record.order = n;
  record.kind = config.kind;
  for (const Partial& p : partials) record.labeled_count += p.labeled;

  if (config.up_to_iso) {
    std::set<std::vector<int>> merged;
    for (Partial& p : partials) merged.merge(std::move(p.reps));
    record.iso_count = static_cast<long long>(merged.size());
    if (orderly) {
      // The orderly walk prunes non-canonical completions, so labeled
      // counts come from the orbit sizes n!/|Aut| of the representatives.
      long long factorial = 1;
      for (int i = 2; i <= n; ++i) factorial *= i;
      record.labeled_count = 0;
      for (const std::vector<int>& t : merged) {
        record.labeled_count += factorial / count_automorphisms(n, t, pool);
      }
    }
    if (config.emit_tables) {
      record.representatives.reserve(merged.size());
      for (const std::vector<int>& t : merged) {
        record.representatives.push_back(FiniteRack::unchecked(n, t));
      }
    }
  }
  return record;
}

CensusRecord brute_force_census(int order, StructureKind kind) {
  if (order < 1) throw std::invalid_argument("census order must be at least 1");
  if (order > kOracleOrderCap) {
    throw CapExceeded("brute-force scan refused above order " + std::to_string(kOracleOrderCap) +
                      " (got " + std::to_string(order) + ")");
  }
  const int n = order;
  const PermPool pool = build_perm_pool(n);
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<int> table(cells, 0);

  CensusRecord record;
  record.order = n;
  record.kind = kind;
  std::set<std::vector<int>> reps;
  for (;;) {
    if (table_valid_direct(n, table) && table_has_kind_direct(n, table, kind)) {
      ++record.labeled_count;
      reps.insert(min_relabeling(n, table, pool));
    }
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++table[i] < n) break;
      table[i] = 0;
      if (i == 0) {
        record.iso_count = static_cast<long long>(reps.size());
        for (const std::vector<int>& t : reps) {
          record.representatives.push_back(FiniteRack::unchecked(n, t));
        }
        return record;
      }
    }
  }
}

}  // namespace rackkit
