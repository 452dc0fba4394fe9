// Enumeration-based checks: the descendant-key oracle, the frameproof
// definition, and perfect-hash separation.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <string>

#include "parallel.h"
#include "sepcode/combinatorics.h"
#include "sepcode/verify.h"

namespace sepcode {
namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

void check_strength(const Code& code, int t, int min_t) {
  if (t < min_t) {
    throw InvalidArgument("strength t must be >= " + std::to_string(min_t));
  }
  if (static_cast<std::size_t>(t) > code.size()) {
    throw InvalidArgument("strength t=" + std::to_string(t) +
                          " exceeds code size " + std::to_string(code.size()));
  }
}

void check_budget(std::uint64_t required, const VerifyOptions& options) {
  if (required > options.budget) {
    throw BudgetExceeded(required, options.budget);
  }
}

// Canonical descendant key of a subset, as one 64-bit word.
//
// Each coordinate contributes its sorted distinct symbols padded to t
// entries by repeating the largest. When n * t symbols fit in 63 bits the
// packing is exact; otherwise the word is a hash and equal words must be
// confirmed by comparing full keys.
class KeyCodec {
 public:
  KeyCodec(const Code& code, std::size_t t) : code_(code), t_(t) {
    const std::uint32_t q = code.alphabet_size();
    bits_ = std::max<unsigned>(1, std::bit_width(q > 0 ? q - 1 : 0u));
    exact_ = code.length() * t * bits_ <= 63;
    scratch_.resize(t);
  }

  bool exact() const { return exact_; }

  std::uint64_t encode(std::span<const std::size_t> subset) {
    std::uint64_t acc = exact_ ? 0 : 0xcbf29ce484222325ull;
    const std::size_t s = subset.size();
    for (std::size_t r = 0; r < code_.length(); ++r) {
      for (std::size_t i = 0; i < s; ++i) {
        scratch_[i] = code_.at(subset[i], r);
      }
      std::sort(scratch_.begin(), scratch_.begin() + s);
      const auto end = std::unique(scratch_.begin(), scratch_.begin() + s);
      const auto distinct = static_cast<std::size_t>(end - scratch_.begin());
      for (std::size_t i = 0; i < t_; ++i) {
        const Symbol v = scratch_[std::min(i, distinct - 1)];
        if (exact_) {
          acc = (acc << bits_) | v;
        } else {
          acc = mix64(acc ^ (v + 0x9e3779b97f4a7c15ull));
        }
      }
    }
    if (!exact_ && acc == kEmpty) acc = kEmpty - 1;
    return acc;
  }

 private:
  const Code& code_;
  std::size_t t_;
  unsigned bits_ = 1;
  bool exact_ = true;
  std::vector<Symbol> scratch_;
};

// Open-addressing map from key word to the rank of the first subset seen
// with that key.
class KeyTable {
 public:
  explicit KeyTable(std::uint64_t expected) {
    std::size_t size = 1u << 12;
    while (size < expected * 2 && size < (std::size_t{1} << 24)) size <<= 1;
    slots_.resize(size);
  }

  std::size_t home(std::uint64_t key) const {
    return mix64(key) & (slots_.size() - 1);
  }

  void prefetch(std::size_t slot) const {
    __builtin_prefetch(&slots_[slot], 1);
  }

  // Returns the rank of an earlier subset with an equal key, or inserts.
  // `slot` must be home(key) for the current table size.
  template <typename SameKey>
  std::optional<std::uint64_t> find_or_insert(std::uint64_t key,
                                              std::size_t slot,
                                              std::uint64_t rank,
                                              SameKey&& same_key) {
    if ((used_ + 1) * 2 > slots_.size()) {
      grow();
      slot = home(key);
    }
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = slot;
    while (slots_[i].key != kEmpty) {
      if (slots_[i].key == key && same_key(slots_[i].rank)) {
        return slots_[i].rank;
      }
      i = (i + 1) & mask;
    }
    slots_[i] = {key, rank};
    ++used_;
    return std::nullopt;
  }

 private:
  struct Slot {
    std::uint64_t key = kEmpty;
    std::uint64_t rank = 0;
  };

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    const std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (s.key == kEmpty) continue;
      std::size_t i = mix64(s.key) & mask;
      while (slots_[i].key != kEmpty) i = (i + 1) & mask;
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

VerifyReport run_key_oracle(const Code& code, std::size_t lo, std::size_t hi,
                            const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::size_t m = code.size();
  const std::uint64_t total = subset_count(m, lo, hi);
  check_budget(total, options);

  const unsigned workers = std::max(1u, options.workers);
  std::atomic<std::uint64_t> best{kNoRank};
  std::mutex result_mu;
  std::uint64_t later_rank = kNoRank;
  std::uint64_t earlier_rank = kNoRank;

  // Keys are sharded across workers by hash; every worker walks the full
  // enumeration but only records keys of its own shard, so each shard sees
  // its keys in global order and the merged minimum is worker-independent.
  internal::run_workers(workers, [&](unsigned w) {
    KeyCodec codec(code, hi);
    KeyTable table(total / workers + 1);
    // Keys are computed a batch ahead so their slots can be prefetched;
    // they are still inserted strictly in rank order.
    constexpr std::size_t kBatch = 16;
    struct Pending {
      std::uint64_t key;
      std::size_t slot;
      std::uint64_t rank;
      std::vector<std::size_t> combo;
    };
    std::vector<Pending> batch(kBatch);
    std::size_t filled = 0;
    bool stop = false;

    auto flush = [&] {
      for (std::size_t b = 0; b < filled && !stop; ++b) {
        const Pending& p = batch[b];
        auto same_key = [&](std::uint64_t other) {
          if (codec.exact()) return true;
          const auto prev = graded_unrank(other, m, lo, hi);
          return descendant_key(code, prev) == descendant_key(code, p.combo);
        };
        if (auto earlier = table.find_or_insert(p.key, p.slot, p.rank,
                                                same_key)) {
          std::lock_guard lock(result_mu);
          if (p.rank < later_rank) {
            later_rank = p.rank;
            earlier_rank = *earlier;
          }
          std::uint64_t cur = best.load();
          while (p.rank < cur && !best.compare_exchange_weak(cur, p.rank)) {
          }
          stop = true;
        }
      }
      filled = 0;
    };

    std::uint64_t rank = 0;
    std::vector<std::size_t> combo;
    for (std::size_t s = lo; s <= hi && !stop; ++s) {
      combo.resize(s);
      for (std::size_t i = 0; i < s; ++i) combo[i] = i;
      do {
        if (workers > 1 && rank > best.load(std::memory_order_relaxed)) {
          flush();
          return;
        }
        const std::uint64_t key = codec.encode(combo);
        if (workers == 1 || (mix64(key ^ 0x5bd1e995ull) % workers) == w) {
          Pending& p = batch[filled++];
          p.key = key;
          p.slot = table.home(key);
          p.rank = rank;
          if (!codec.exact()) p.combo = combo;
          table.prefetch(p.slot);
          if (filled == kBatch) {
            flush();
            if (stop) return;
          }
        }
        ++rank;
      } while (next_combination(combo, m));
    }
    flush();
  });

  VerifyReport report;
  report.method = Method::kOracle;
  report.strength = static_cast<int>(hi);
  if (later_rank == kNoRank) {
    report.holds = true;
    report.examined = total;
  } else {
    report.holds = false;
    report.examined = later_rank + 1;
    Witness w;
    w.kind = WitnessKind::kScPair;
    w.columns = graded_unrank(earlier_rank, m, lo, hi);
    w.second = graded_unrank(later_rank, m, lo, hi);
    report.witness = std::move(w);
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

struct SubsetHit {
  std::vector<std::size_t> combo;
  std::size_t extra = 0;
};

// Finds the first subset (size lo..hi, then lex) for which `visit` reports a
// violation. Work is split into tasks (size, first element) handed out in
// enumeration order, so the earliest violating task wins regardless of
// which worker finds it.
template <typename Visit>
std::optional<SubsetHit> first_violation(std::size_t m, std::size_t lo,
                                         std::size_t hi, unsigned workers,
                                         const Visit& visit) {
  struct Task {
    std::size_t size;
    std::size_t first;
  };
  std::vector<Task> tasks;
  for (std::size_t s = lo; s <= hi; ++s) {
    for (std::size_t f = 0; f + s <= m; ++f) tasks.push_back({s, f});
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_task{tasks.size()};
  std::mutex mu;
  std::optional<SubsetHit> best_hit;
  std::size_t best_index = tasks.size();

  internal::run_workers(workers, [&](unsigned) {
    std::vector<std::size_t> combo;
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size() || idx > best_task.load()) return;
      const auto [s, f] = tasks[idx];
      combo.resize(s);
      for (std::size_t i = 0; i < s; ++i) combo[i] = f + i;
      do {
        if (combo[0] != f) break;
        if (auto extra = visit(std::span<const std::size_t>(combo))) {
          std::lock_guard lock(mu);
          if (idx < best_index) {
            best_index = idx;
            best_hit = SubsetHit{combo, *extra};
            best_task.store(idx);
          }
          break;
        }
      } while (next_combination(combo, m));
    }
  });
  return best_hit;
}

}  // namespace

VerifyReport oracle_sc_bar(const Code& code, int t,
                           const VerifyOptions& options) {
  check_strength(code, t, 1);
  auto report = run_key_oracle(code, 1, static_cast<std::size_t>(t), options);
  report.property = "sc-bar";
  return report;
}

VerifyReport oracle_sc_exact(const Code& code, int t,
                             const VerifyOptions& options) {
  check_strength(code, t, 1);
  const auto s = static_cast<std::size_t>(t);
  auto report = run_key_oracle(code, s, s, options);
  report.property = "sc";
  return report;
}

VerifyReport check_fpc(const Code& code, int t, const VerifyOptions& options) {
  const auto start = Clock::now();
  if (t < 1) throw InvalidArgument("strength t must be >= 1");
  const std::size_t m = code.size();
  // A coalition as large as the code frames nobody.
  const std::size_t hi = std::min<std::size_t>(t, m > 1 ? m - 1 : 1);
  const std::uint64_t total = subset_count(m, 1, hi);
  check_budget(total, options);

  auto hit = first_violation(
      m, 1, hi, options.workers,
      [&](std::span<const std::size_t> coalition) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < m; ++j) {
          if (std::find(coalition.begin(), coalition.end(), j) !=
              coalition.end()) {
            continue;
          }
          if (in_descendant(code, coalition, code.column(j))) return j;
        }
        return std::nullopt;
      });

  VerifyReport report;
  report.property = "fpc";
  report.strength = t;
  report.method = Method::kOracle;
  if (hit) {
    report.holds = false;
    report.examined = graded_rank(hit->combo, m, 1) + 1;
    Witness w;
    w.kind = WitnessKind::kFpcTriple;
    w.columns = hit->combo;
    w.columns.push_back(hit->extra);
    report.witness = std::move(w);
  } else {
    report.examined = total;
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

VerifyReport check_phf(const Code& code, int t, const VerifyOptions& options) {
  const auto start = Clock::now();
  check_strength(code, t, 2);
  const std::size_t m = code.size();
  const auto s = static_cast<std::size_t>(t);
  const std::uint64_t total = binomial(m, s);
  check_budget(total, options);

  auto separated = [&](std::span<const std::size_t> cols, std::size_t r) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = i + 1; j < cols.size(); ++j) {
        if (code.at(cols[i], r) == code.at(cols[j], r)) return false;
      }
    }
    return true;
  };
  auto hit = first_violation(
      m, s, s, options.workers,
      [&](std::span<const std::size_t> cols) -> std::optional<std::size_t> {
        for (std::size_t r = 0; r < code.length(); ++r) {
          if (separated(cols, r)) return std::nullopt;
        }
        return 0;
      });

  VerifyReport report;
  report.property = "phf";
  report.strength = t;
  report.method = Method::kOracle;
  if (hit) {
    report.holds = false;
    report.examined = lex_rank(hit->combo, m) + 1;
    report.witness = Witness{WitnessKind::kPhfSet, hit->combo, {}, {}, {}};
  } else {
    report.examined = total;
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace sepcode
