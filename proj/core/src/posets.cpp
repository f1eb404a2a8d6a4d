#include "srcomb/posets.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "srcomb/riordan.hpp"

namespace srcomb {

namespace {

std::string render_set(const std::vector<int>& v, const char* sep) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

int universe_max(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  int m = 0;
  for (const auto& v : a)
    for (int e : v) m = std::max(m, e);
  for (const auto& v : b)
    for (int e : v) m = std::max(m, e);
  return m;
}

bool covers_exactly(const std::vector<std::vector<int>>& parts_a,
                    const std::vector<std::vector<int>>& parts_b, int n) {
  std::vector<char> seen(n + 1, 0);
  long count = 0;
  auto mark = [&](const std::vector<std::vector<int>>& parts) {
    for (const auto& v : parts)
      for (int e : v) {
        if (e < 1 || e > n || seen[e]) return false;
        seen[e] = 1;
        ++count;
      }
    return true;
  };
  return mark(parts_a) && mark(parts_b) && count == n;
}

}  // namespace

void CompositionPartitionPair::canonicalize() {
  for (auto& c : components) std::sort(c.begin(), c.end());
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool CompositionPartitionPair::is_valid(const IndexSet& S, long r, long n) const {
  if (static_cast<long>(components.size()) != r) return false;
  if (!covers_exactly(components, blocks, static_cast<int>(n))) return false;
  const IndexSet sp = S.derivative();
  for (const auto& c : components)
    if (!sp.contains(static_cast<long>(c.size()))) return false;
  for (const auto& b : blocks)
    if (b.empty() || !S.contains(static_cast<long>(b.size()))) return false;
  return true;
}

std::string CompositionPartitionPair::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += "{" + (components[i].empty() ? "" : render_set(components[i], " ")) + "}";
  }
  out += ")||";
  if (blocks.empty()) {
    out += "-";
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) out += "|";
      out += render_set(blocks[i], " ");
    }
  }
  return out;
}

void CompositionPermutationPair::canonicalize() {
  for (auto& c : cycles) {
    const auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool CompositionPermutationPair::is_valid(const IndexSet& S, long r, long n) const {
  if (static_cast<long>(components.size()) != r) return false;
  if (!covers_exactly(components, cycles, static_cast<int>(n))) return false;
  const IndexSet sp = S.derivative();
  for (const auto& c : components)
    if (!sp.contains(static_cast<long>(c.size()))) return false;
  for (const auto& c : cycles) {
    if (c.empty() || !S.contains(static_cast<long>(c.size()))) return false;
    if (*std::min_element(c.begin(), c.end()) != c.front()) return false;
  }
  return true;
}

std::string CompositionPermutationPair::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += render_set(components[i], " ");
  }
  out += ")||";
  if (cycles.empty()) {
    out += "-";
  } else {
    for (const auto& c : cycles) out += "(" + render_set(c, " ") + ")";
  }
  return out;
}

bool leq_pairs(const CompositionPartitionPair& a, const CompositionPartitionPair& b,
               const IndexSet& S) {
  if (a.components.size() != b.components.size()) return false;
  const IndexSet sp = S.derivative();
  const int n = universe_max(a.components, a.blocks);

  std::vector<int> block_of(n + 1, -1);
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    for (int e : a.blocks[i]) block_of[e] = static_cast<int>(i);

  std::vector<int> consumed(a.blocks.size(), 0);
  std::vector<int> touched;
  // Checks that a group of elements decomposes into whole blocks of a and
  // returns the number of blocks used, or -1.
  auto whole_blocks = [&](const std::vector<int>& elems) -> long {
    touched.clear();
    for (int e : elems) {
      if (e > n || block_of[e] < 0) return -1;
      if (consumed[block_of[e]]++ == 0) touched.push_back(block_of[e]);
    }
    long groups = 0;
    bool ok = true;
    for (int id : touched) {
      if (consumed[id] != static_cast<int>(a.blocks[id].size())) ok = false;
      consumed[id] = 0;
      ++groups;
    }
    return ok ? groups : -1;
  };

  for (std::size_t i = 0; i < a.components.size(); ++i) {
    const auto& av = a.components[i];
    const auto& bv = b.components[i];
    if (!std::includes(bv.begin(), bv.end(), av.begin(), av.end())) return false;
    std::vector<int> grown;
    std::set_difference(bv.begin(), bv.end(), av.begin(), av.end(), std::back_inserter(grown));
    const long t = whole_blocks(grown);
    if (t < 0 || !sp.contains(t)) return false;
  }
  for (const auto& block : b.blocks) {
    const long s = whole_blocks(block);
    if (s < 0 || !S.contains(s)) return false;
  }
  return true;
}

bool leq_ordered(const CompositionPermutationPair& a, const CompositionPermutationPair& b,
                 const IndexSet& S) {
  if (a.components.size() != b.components.size()) return false;
  const IndexSet sp = S.derivative();
  const int n = universe_max(a.components, a.cycles);

  std::vector<int> cycle_of(n + 1, -1);
  for (std::size_t i = 0; i < a.cycles.size(); ++i)
    for (int e : a.cycles[i]) cycle_of[e] = static_cast<int>(i);

  // Parses seq[pos..] as a concatenation of whole cycles of a, each in its
  // canonical least-first form; returns the cycle count or -1.
  auto parse_cycles = [&](const std::vector<int>& seq, std::size_t pos) -> long {
    long count = 0;
    while (pos < seq.size()) {
      const int e = seq[pos];
      if (e > n || cycle_of[e] < 0) return -1;
      const auto& c = a.cycles[cycle_of[e]];
      if (c.front() != e || pos + c.size() > seq.size()) return -1;
      for (std::size_t t = 0; t < c.size(); ++t)
        if (seq[pos + t] != c[t]) return -1;
      pos += c.size();
      ++count;
    }
    return count;
  };

  for (std::size_t i = 0; i < a.components.size(); ++i) {
    const auto& av = a.components[i];
    const auto& bv = b.components[i];
    if (bv.size() < av.size() || !std::equal(av.begin(), av.end(), bv.begin())) return false;
    const long t = parse_cycles(bv, av.size());
    if (t < 0 || !sp.contains(t)) return false;
  }
  for (const auto& cyc : b.cycles) {
    const long s = parse_cycles(cyc, 0);
    if (s < 0 || !S.contains(s)) return false;
  }
  return true;
}

namespace {

// Sorted list of bit positions set in mask.
std::vector<int> mask_positions(unsigned long mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1UL) out.push_back(i);
  return out;
}

}  // namespace

std::vector<CompositionPartitionPair> one_step_successors(const CompositionPartitionPair& p,
                                                          const IndexSet& S) {
  std::vector<CompositionPartitionPair> out;
  const std::size_t k = p.blocks.size();
  const IndexSet sp = S.derivative();

  for (unsigned long mask = 1; k > 0 && mask < (1UL << k); ++mask) {
    const auto chosen = mask_positions(mask);
    const long l = static_cast<long>(chosen.size());
    std::vector<int> merged;
    for (int id : chosen)
      merged.insert(merged.end(), p.blocks[id].begin(), p.blocks[id].end());

    if (l >= 2 && S.contains(l)) {  // join l blocks into one
      CompositionPartitionPair q = p;
      for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
        q.blocks.erase(q.blocks.begin() + *it);
      q.blocks.push_back(merged);
      q.canonicalize();
      out.push_back(std::move(q));
    }
    if (l >= 1 && sp.contains(l)) {  // absorb l blocks into one component
      for (std::size_t j = 0; j < p.components.size(); ++j) {
        CompositionPartitionPair q = p;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
          q.blocks.erase(q.blocks.begin() + *it);
        q.components[j].insert(q.components[j].end(), merged.begin(), merged.end());
        q.canonicalize();
        out.push_back(std::move(q));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CompositionPermutationPair> one_step_successors(const CompositionPermutationPair& p,
                                                            const IndexSet& S) {
  std::vector<CompositionPermutationPair> out;
  const std::size_t k = p.cycles.size();
  const IndexSet sp = S.derivative();

  for (unsigned long mask = 1; k > 0 && mask < (1UL << k); ++mask) {
    std::vector<int> chosen = mask_positions(mask);
    const long l = static_cast<long>(chosen.size());
    const bool join_ok = l >= 2 && S.contains(l);
    const bool absorb_ok = l >= 1 && sp.contains(l);
    if (!join_ok && !absorb_ok) continue;

    std::sort(chosen.begin(), chosen.end());
    do {  // every concatenation order of the chosen cycles
      std::vector<int> concat;
      for (int id : chosen)
        concat.insert(concat.end(), p.cycles[id].begin(), p.cycles[id].end());

      auto without_chosen = [&](CompositionPermutationPair& q) {
        std::vector<int> sorted_ids = chosen;
        std::sort(sorted_ids.begin(), sorted_ids.end());
        for (auto it = sorted_ids.rbegin(); it != sorted_ids.rend(); ++it)
          q.cycles.erase(q.cycles.begin() + *it);
      };

      if (join_ok) {
        CompositionPermutationPair q = p;
        without_chosen(q);
        q.cycles.push_back(concat);
        q.canonicalize();
        out.push_back(std::move(q));
      }
      if (absorb_ok) {
        for (std::size_t j = 0; j < p.components.size(); ++j) {
          CompositionPermutationPair q = p;
          without_chosen(q);
          q.components[j].insert(q.components[j].end(), concat.begin(), concat.end());
          q.canonicalize();
          out.push_back(std::move(q));
        }
      }
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_monoid(const IndexSet& S, const PairEnumerationOptions& opts, const char* what) {
  const MonoidCheckResult verdict = S.plus_one_monoid_check(opts.monoid_bound);
  if (verdict.is_no())
    throw std::invalid_argument(std::string(what) + ": S = " + S.to_string() +
                                " is not a +1-monoid (" + verdict.describe() + ")");
  if (!verdict.is_yes() && !opts.allow_bounded_monoid)
    throw std::invalid_argument(std::string(what) + ": S = " + S.to_string() +
                                " is only a +1-monoid " + verdict.describe() +
                                "; set allow_bounded_monoid to accept");
}

// All set partitions of `elems` with every block size in S.
void restricted_partitions(const std::vector<int>& elems, const IndexSet& S,
                           std::vector<std::vector<int>>& blocks,
                           const std::function<void()>& emit, std::size_t at = 0) {
  if (at == elems.size()) {
    for (const auto& b : blocks)
      if (!S.contains(static_cast<long>(b.size()))) return;
    emit();
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {  // indexed: recursion reallocates
    blocks[i].push_back(elems[at]);
    restricted_partitions(elems, S, blocks, emit, at + 1);
    blocks[i].pop_back();
  }
  blocks.push_back({elems[at]});
  restricted_partitions(elems, S, blocks, emit, at + 1);
  blocks.pop_back();
}

// Invokes fn for every assignment of elements 1..n to targets 0..r
// (target r = partition part, targets 0..r-1 = components).
void for_each_assignment(long n, long r,
                         const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> label(n, 0);
  while (true) {
    fn(label);
    long pos = 0;
    while (pos < n && label[pos] == r) label[pos++] = 0;
    if (pos == n) break;
    ++label[pos];
  }
}

}  // namespace

std::vector<CompositionPartitionPair> enumerate_partition_pairs(
    const IndexSet& S, long r, long n, const PairEnumerationOptions& opts) {
  if (n < 0 || n > opts.max_n_partitions)
    throw std::invalid_argument("enumerate_partition_pairs: n = " + std::to_string(n) +
                                " exceeds guard " + std::to_string(opts.max_n_partitions));
  require_monoid(S, opts, "enumerate_partition_pairs");
  const IndexSet sp = S.derivative();

  std::vector<CompositionPartitionPair> out;
  for_each_assignment(n, r, [&](const std::vector<int>& label) {
    CompositionPartitionPair base;
    base.components.assign(r, {});
    std::vector<int> rest;
    for (long e = 1; e <= n; ++e) {
      if (label[e - 1] < r)
        base.components[label[e - 1]].push_back(static_cast<int>(e));
      else
        rest.push_back(static_cast<int>(e));
    }
    for (const auto& c : base.components)
      if (!sp.contains(static_cast<long>(c.size()))) return;

    std::vector<std::vector<int>> blocks;
    restricted_partitions(rest, S, blocks, [&]() {
      CompositionPartitionPair q = base;
      q.blocks = blocks;
      q.canonicalize();
      out.push_back(std::move(q));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompositionPermutationPair> enumerate_permutation_pairs(
    const IndexSet& S, long r, long n, const PairEnumerationOptions& opts) {
  if (n < 0 || n > opts.max_n_permutations)
    throw std::invalid_argument("enumerate_permutation_pairs: n = " + std::to_string(n) +
                                " exceeds guard " + std::to_string(opts.max_n_permutations));
  require_monoid(S, opts, "enumerate_permutation_pairs");
  const IndexSet sp = S.derivative();

  std::vector<CompositionPermutationPair> out;
  for_each_assignment(n, r, [&](const std::vector<int>& label) {
    std::vector<std::vector<int>> comp_sets(r);
    std::vector<int> rest;
    for (long e = 1; e <= n; ++e) {
      if (label[e - 1] < r)
        comp_sets[label[e - 1]].push_back(static_cast<int>(e));
      else
        rest.push_back(static_cast<int>(e));
    }
    for (const auto& c : comp_sets)
      if (!sp.contains(static_cast<long>(c.size()))) return;

    // every linear order of every component
    std::vector<std::vector<std::vector<int>>> comp_orders(r);
    for (long i = 0; i < r; ++i) {
      auto seq = comp_sets[i];
      do {
        comp_orders[i].push_back(seq);
      } while (std::next_permutation(seq.begin(), seq.end()));
    }

    std::vector<std::vector<int>> blocks;
    restricted_partitions(rest, S, blocks, [&]() {
      // every choice of cyclic order per block (least element first)
      std::vector<std::vector<std::vector<int>>> cycle_orders(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> tail(blocks[b].begin() + 1, blocks[b].end());
        std::sort(tail.begin(), tail.end());
        do {
          std::vector<int> cyc{blocks[b].front()};
          cyc.insert(cyc.end(), tail.begin(), tail.end());
          cycle_orders[b].push_back(std::move(cyc));
        } while (std::next_permutation(tail.begin(), tail.end()));
      }

      // cartesian product over component orders and cycle orders
      CompositionPermutationPair q;
      q.components.assign(r, {});
      q.cycles.assign(blocks.size(), {});
      std::function<void(std::size_t)> pick_cycle = [&](std::size_t b) {
        if (b == blocks.size()) {
          CompositionPermutationPair copy = q;
          copy.canonicalize();
          out.push_back(std::move(copy));
          return;
        }
        for (const auto& cyc : cycle_orders[b]) {
          q.cycles[b] = cyc;
          pick_cycle(b + 1);
        }
      };
      std::function<void(std::size_t)> pick_component = [&](std::size_t i) {
        if (i == static_cast<std::size_t>(r)) {
          pick_cycle(0);
          return;
        }
        for (const auto& ord : comp_orders[i]) {
          q.components[i] = ord;
          pick_component(i + 1);
        }
      };
      pick_component(0);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

Poset::Poset(std::vector<std::string> labels, std::vector<long> part_counts,
             const std::function<bool(std::size_t, std::size_t)>& leq_fn)
    : labels_(std::move(labels)), part_counts_(std::move(part_counts)) {
  const std::size_t V = labels_.size();
  if (V == 0) throw std::invalid_argument("Poset: no elements");
  if (part_counts_.size() != V) throw std::invalid_argument("Poset: part count size mismatch");
  const std::size_t W = words();
  down_.assign(V * W, 0);
  for (std::size_t y = 0; y < V; ++y)
    for (std::size_t x = 0; x < V; ++x)
      if (leq_fn(x, y)) down_[y * W + x / 64] |= (1ULL << (x % 64));

  for (std::size_t i = 0; i < V; ++i)
    if (!leq(i, i)) throw std::logic_error("Poset: relation not reflexive at " + labels_[i]);
  for (std::size_t y = 0; y < V; ++y)
    for (std::size_t x = 0; x < y; ++x)
      if (leq(x, y) && leq(y, x))
        throw std::logic_error("Poset: relation not antisymmetric between " + labels_[x] +
                               " and " + labels_[y]);
  // transitivity: x <= y implies down(x) subset of down(y)
  for (std::size_t y = 0; y < V; ++y) {
    for (std::size_t x = 0; x < V; ++x) {
      if (x == y || !leq(x, y)) continue;
      for (std::size_t w = 0; w < W; ++w)
        if (down_[x * W + w] & ~down_[y * W + w])
          throw std::logic_error("Poset: relation not transitive below " + labels_[y]);
    }
  }

  // unique least element
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < V; ++i) {
    std::size_t below = 0;
    for (std::size_t w = 0; w < W; ++w) below += std::popcount(down_[i * W + w]);
    if (below == 1) minimal.push_back(i);
  }
  if (minimal.size() != 1)
    throw std::logic_error("Poset: expected a unique minimal element, found " +
                           std::to_string(minimal.size()));
  zero_hat_ = minimal[0];
  for (std::size_t i = 0; i < V; ++i)
    if (!leq(zero_hat_, i))
      throw std::logic_error("Poset: minimal element is not a least element");

  // linear extension: ascending size of down-sets
  std::vector<std::size_t> downsize(V);
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t w = 0; w < W; ++w) downsize[i] += std::popcount(down_[i * W + w]);
  linear_extension_.resize(V);
  for (std::size_t i = 0; i < V; ++i) linear_extension_[i] = i;
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](std::size_t a, std::size_t b) { return downsize[a] < downsize[b]; });
}

bool Poset::leq(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw std::invalid_argument("Poset::leq: index out of range");
  return (down_[y * words() + x / 64] >> (x % 64)) & 1ULL;
}

std::vector<BigInt> Poset::mobius_from_bottom() const {
  std::vector<BigInt> mu(size());
  const std::size_t W = words();
  for (std::size_t idx : linear_extension_) {
    if (idx == zero_hat_) {
      mu[idx] = 1;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t w = 0; w < W; ++w) {
      std::uint64_t bits = down_[idx * W + w];
      while (bits) {
        const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (x != idx) acc += mu[x];
      }
    }
    mu[idx] = -acc;
  }
  return mu;
}

BigInt Poset::mobius(std::size_t x, std::size_t y) const {
  if (!leq(x, y))
    throw std::invalid_argument("Poset::mobius: " + labels_[x] + " is not below " + labels_[y]);
  // interval [x, y] in linear-extension order
  std::vector<std::size_t> interval;
  std::size_t pos_x = 0, pos_y = 0;
  for (std::size_t idx : linear_extension_) {
    if (!leq(x, idx) || !leq(idx, y)) continue;
    if (idx == x) pos_x = interval.size();
    if (idx == y) pos_y = interval.size();
    interval.push_back(idx);
  }
  TriMatrix zeta(interval.size());
  for (std::size_t i = 0; i < interval.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      zeta.set(i, j, leq(interval[j], interval[i]) ? Rational(1) : Rational(0));
  const TriMatrix mu = zeta.inverse();
  return mu.at(pos_y, pos_x).to_integer();
}

BigInt Poset::mobius_column_sum(long k) const {
  const auto mu = mobius_from_bottom();
  BigInt acc = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (part_counts_[i] == k) acc += mu[i];
  return acc;
}

BigInt Poset::count_above(std::size_t x, long j) const {
  BigInt acc = 0;
  for (std::size_t y = 0; y < size(); ++y)
    if (part_counts_[y] == j && leq(x, y)) acc += 1;
  return acc;
}

std::string Poset::to_dot() const {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << labels_[i] << "\"];\n";
  for (std::size_t y = 0; y < size(); ++y) {
    for (std::size_t x = 0; x < size(); ++x) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < size() && cover; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      if (cover) os << "  n" << x << " -> n" << y << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

PartitionPairPoset PartitionPairPoset::build(const IndexSet& S, long r, long n,
                                             const PairEnumerationOptions& opts) {
  auto elements = enumerate_partition_pairs(S, r, n, opts);
  std::vector<std::string> labels;
  std::vector<long> parts;
  labels.reserve(elements.size());
  parts.reserve(elements.size());
  for (const auto& e : elements) {
    labels.push_back(e.to_string());
    parts.push_back(e.block_count());
  }
  Poset poset(std::move(labels), std::move(parts), [&](std::size_t x, std::size_t y) {
    return leq_pairs(elements[x], elements[y], S);
  });
  return PartitionPairPoset{S, r, n, std::move(elements), std::move(poset)};
}

std::size_t PartitionPairPoset::index_of(const CompositionPartitionPair& p) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p))
    throw std::invalid_argument("PartitionPairPoset: element not found: " + p.to_string());
  return static_cast<std::size_t>(it - elements.begin());
}

PermutationPairPoset PermutationPairPoset::build(const IndexSet& S, long r, long n,
                                                 const PairEnumerationOptions& opts) {
  auto elements = enumerate_permutation_pairs(S, r, n, opts);
  std::vector<std::string> labels;
  std::vector<long> parts;
  labels.reserve(elements.size());
  parts.reserve(elements.size());
  for (const auto& e : elements) {
    labels.push_back(e.to_string());
    parts.push_back(e.cycle_count());
  }
  Poset poset(std::move(labels), std::move(parts), [&](std::size_t x, std::size_t y) {
    return leq_ordered(elements[x], elements[y], S);
  });
  return PermutationPairPoset{S, r, n, std::move(elements), std::move(poset)};
}

std::size_t PermutationPairPoset::index_of(const CompositionPermutationPair& p) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p))
    throw std::invalid_argument("PermutationPairPoset: element not found: " + p.to_string());
  return static_cast<std::size_t>(it - elements.begin());
}

BigInt mobius_column_sum(const IndexSet& S, long r, long n, long k, StirlingKind kind,
                         const PairEnumerationOptions& opts) {
  if (kind == StirlingKind::second)
    return PartitionPairPoset::build(S, r, n, opts).poset.mobius_column_sum(k);
  return PermutationPairPoset::build(S, r, n, opts).poset.mobius_column_sum(k);
}

bool coideal_cardinality_check(const PartitionPairPoset& pp, std::size_t base_index, long j) {
  const long k = pp.poset.part_count(base_index);
  PairEnumerationOptions opts;
  opts.allow_bounded_monoid = true;  // S was vetted when the poset was built
  const auto smaller = enumerate_partition_pairs(pp.S, pp.r, k, opts);
  BigInt expected = 0;
  for (const auto& e : smaller)
    if (e.block_count() == j) expected += 1;
  return pp.poset.count_above(base_index, j) == expected;
}

bool coideal_cardinality_check(const PermutationPairPoset& pp, std::size_t base_index, long j) {
  const long k = pp.poset.part_count(base_index);
  PairEnumerationOptions opts;
  opts.allow_bounded_monoid = true;
  const auto smaller = enumerate_permutation_pairs(pp.S, pp.r, k, opts);
  BigInt expected = 0;
  for (const auto& e : smaller)
    if (e.cycle_count() == j) expected += 1;
  return pp.poset.count_above(base_index, j) == expected;
}

namespace {

long covered_count(const std::vector<std::vector<int>>& a,
                   const std::vector<std::vector<int>>& b) {
  long n = 0;
  for (const auto& v : a) n += static_cast<long>(v.size());
  for (const auto& v : b) n += static_cast<long>(v.size());
  return n;
}

}  // namespace

bool coideal_cardinality_check(const IndexSet& S, const CompositionPartitionPair& base, long j,
                               const PairEnumerationOptions& opts) {
  const long n = covered_count(base.components, base.blocks);
  const auto pp =
      PartitionPairPoset::build(S, static_cast<long>(base.components.size()), n, opts);
  return coideal_cardinality_check(pp, pp.index_of(base), j);
}

bool coideal_cardinality_check(const IndexSet& S, const CompositionPermutationPair& base, long j,
                               const PairEnumerationOptions& opts) {
  const long n = covered_count(base.components, base.cycles);
  const auto pp =
      PermutationPairPoset::build(S, static_cast<long>(base.components.size()), n, opts);
  return coideal_cardinality_check(pp, pp.index_of(base), j);
}

}  // namespace srcomb
