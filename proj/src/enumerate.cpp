#include "dglab/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace dglab {

namespace {

std::vector<std::string> letter_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

long long pow_ll(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

// Decodes a table code (base-n digits, row-major, most significant first).
std::vector<int> decode(long long code, int n) {
  const int cells = n * n;
  std::vector<int> products(static_cast<size_t>(cells));
  for (int i = cells - 1; i >= 0; --i) {
    products[static_cast<size_t>(i)] = static_cast<int>(code % n);
    code /= n;
  }
  return products;
}

int clamp_workers(int workers) { return std::max(1, std::min(workers, 64)); }

// All associativity triples that become fully determined once a given cell
// is filled (row-major fill order).  For triple (a,b,c) the cells involved
// are (a,b), (ab,c), (b,c), (a,bc); ab and bc depend on values, so the
// check walks triples whose base cells are filled and resolves lazily.
bool prefix_associative(const std::vector<int>& cells, int filled, int n) {
  // cells[i*n+j] = product, -1 when unset; `filled` = number of set cells
  // in row-major order (cells [0, filled) are set).
  auto get = [&](int i, int j) { return cells[static_cast<size_t>(i) * n + j]; };
  auto is_set = [&](int i, int j) { return i * n + j < filled; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!is_set(a, b)) continue;
      const int ab = get(a, b);
      for (int c = 0; c < n; ++c) {
        if (!is_set(b, c) || !is_set(ab, c)) continue;
        const int bc = get(b, c);
        if (!is_set(a, bc)) continue;
        if (get(ab, c) != get(a, bc)) return false;
      }
    }
  return true;
}

void backtrack(std::vector<int>& cells, int pos, int n,
               const std::function<void(const std::vector<int>&)>& emit) {
  const int total = n * n;
  if (pos == total) {
    emit(cells);
    return;
  }
  for (int v = 0; v < n; ++v) {
    cells[static_cast<size_t>(pos)] = v;
    // Only triples completed by this very cell need rechecking, but at this
    // scale a full prefix pass is already instant.
    if (prefix_associative(cells, pos + 1, n)) backtrack(cells, pos + 1, n, emit);
  }
  cells[static_cast<size_t>(pos)] = -1;
}

}  // namespace

const char* to_token(TableClass c) {
  switch (c) {
    case TableClass::all: return "all";
    case TableClass::semigroup: return "semigroup";
    case TableClass::monoid: return "monoid";
    case TableClass::regular: return "regular";
    case TableClass::inverse: return "inverse";
    case TableClass::literal_dg: return "literal-dg";
    case TableClass::strict_dg: return "strict-dg";
    case TableClass::group: return "group";
  }
  return "all";
}

TableClass table_class_from_token(std::string_view token) {
  for (TableClass c : {TableClass::all, TableClass::semigroup, TableClass::monoid,
                       TableClass::regular, TableClass::inverse, TableClass::literal_dg,
                       TableClass::strict_dg, TableClass::group})
    if (token == to_token(c)) return c;
  throw std::invalid_argument("unknown class '" + std::string(token) + "'");
}

bool in_class(const ClassificationReport& r, TableClass c) {
  switch (c) {
    case TableClass::all: return true;
    case TableClass::semigroup: return r.isAssociative;
    case TableClass::monoid: return r.isMonoid;
    case TableClass::regular: return r.isRegularSemigroup;
    case TableClass::inverse: return r.isInverseSemigroup;
    case TableClass::literal_dg: return r.isDisguisedLiteral;
    case TableClass::strict_dg: return r.isDisguisedStrict;
    case TableClass::group: return r.isGroup;
  }
  return false;
}

std::vector<CayleyTable> enumerate_tables_scan(int order, TableClass filter, int workers) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("full scan supports orders 1..3");
  const long long total = pow_ll(order, order * order);
  const auto names = letter_names(order);
  workers = clamp_workers(workers);

  std::vector<std::vector<CayleyTable>> partial(static_cast<size_t>(workers));
  auto run = [&](int w) {
    const long long lo = total * w / workers;
    const long long hi = total * (w + 1) / workers;
    for (long long code = lo; code < hi; ++code) {
      CayleyTable t(names, decode(code, order));
      if (filter == TableClass::all || in_class(classify(t), filter))
        partial[static_cast<size_t>(w)].push_back(std::move(t));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }
  std::vector<CayleyTable> out;
  for (auto& chunk : partial)
    for (auto& t : chunk) out.push_back(std::move(t));
  return out;
}

std::vector<CayleyTable> enumerate_semigroups_pruned(int order, int workers) {
  if (order < 1 || order > 4)
    throw std::invalid_argument("pruned enumeration supports orders 1..4");
  const auto names = letter_names(order);
  workers = clamp_workers(workers);
  const int cells = order * order;

  // Split the search at the first two cells; each seed runs an independent
  // backtracking search, and seed order preserves the lexicographic output.
  struct Seed {
    int v0, v1;
  };
  std::vector<Seed> seeds;
  if (cells >= 2) {
    for (int v0 = 0; v0 < order; ++v0)
      for (int v1 = 0; v1 < order; ++v1) seeds.push_back({v0, v1});
  } else {
    seeds.push_back({0, -1});
  }

  std::vector<std::vector<std::vector<int>>> results(seeds.size());
  auto run_seed = [&](size_t si) {
    std::vector<int> work(static_cast<size_t>(cells), -1);
    int pos = 0;
    work[0] = seeds[si].v0;
    pos = 1;
    if (seeds[si].v1 >= 0) {
      work[1] = seeds[si].v1;
      pos = 2;
    }
    if (!prefix_associative(work, pos, order)) return;
    backtrack(work, pos, order,
              [&](const std::vector<int>& done) { results[si].push_back(done); });
  };

  if (workers == 1) {
    for (size_t si = 0; si < seeds.size(); ++si) run_seed(si);
  } else {
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        for (;;) {
          size_t si = next.fetch_add(1);
          if (si >= seeds.size()) return;
          run_seed(si);
        }
      });
    for (auto& th : threads) th.join();
  }

  std::vector<CayleyTable> out;
  for (const auto& chunk : results)
    for (const auto& products : chunk) out.emplace_back(names, products);
  return out;
}

std::vector<CayleyTable> enumerate_tables(int order, TableClass filter, int workers) {
  if (order >= 1 && order <= 3) return enumerate_tables_scan(order, filter, workers);
  if (order == 4) {
    if (filter == TableClass::all)
      throw std::invalid_argument(
          "order 4 needs an associativity filter (semigroup or stronger)");
    auto semis = enumerate_semigroups_pruned(order, workers);
    if (filter == TableClass::semigroup) return semis;
    std::vector<CayleyTable> out;
    for (auto& t : semis)
      if (in_class(classify(t), filter)) out.push_back(std::move(t));
    return out;
  }
  throw std::invalid_argument("enumeration supports orders 1..4");
}

std::string canonical_form(const CayleyTable& table) {
  const int n = table.order();
  if (n > 7) throw std::invalid_argument("canonical form supports orders <= 7");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> cur(static_cast<size_t>(n) * n);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur[static_cast<size_t>(i) * n + j] =
            perm[static_cast<size_t>(table.at(inv[static_cast<size_t>(i)], inv[static_cast<size_t>(j)]))];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string out;
  out.reserve(best.size());
  for (int v : best) out.push_back(static_cast<char>('0' + v));
  return out;
}

CayleyTable canonicalize(const CayleyTable& table, std::vector<int>* perm_out) {
  const int n = table.order();
  if (n > 7) throw std::invalid_argument("canonical form supports orders <= 7");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, best_perm;
  std::vector<int> cur(static_cast<size_t>(n) * n);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur[static_cast<size_t>(i) * n + j] =
            perm[static_cast<size_t>(table.at(inv[static_cast<size_t>(i)], inv[static_cast<size_t>(j)]))];
    if (best.empty() || cur < best) {
      best = cur;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (perm_out) *perm_out = best_perm;
  return CayleyTable(letter_names(n), best);
}

CayleyTable table_from_encoding(std::string_view encoding) {
  const int cells = static_cast<int>(encoding.size());
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(cells))));
  if (n < 1 || n * n != cells)
    throw std::invalid_argument("encoding length must be a perfect square");
  std::vector<int> products;
  for (char c : encoding) {
    if (c < '0' || c > '9') throw std::invalid_argument("encoding must be digits");
    products.push_back(c - '0');
  }
  return CayleyTable(letter_names(n), std::move(products));
}

}  // namespace dglab
