#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "squap/term.hpp"

namespace squap {

using TermId = std::uint32_t;

struct IdTriple {
  TermId s = 0;
  TermId p = 0;
  TermId o = 0;

  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
  friend bool operator==(const IdTriple&, const IdTriple&) = default;
};

struct IdTripleHash {
  std::size_t operator()(const IdTriple& t) const noexcept {
    std::size_t h = t.s;
    h = h * 0x100000001b3ULL ^ t.p;
    h = h * 0x100000001b3ULL ^ t.o;
    return h;
  }
};

/// Which permutation answers a pattern. Exposed so tests can check that
/// every index returns the same answer for the same pattern.
enum class Index { spo, pos, osp };

/// In-memory triple set with a term dictionary and SPO/POS/OSP indexes.
///
/// Terms are interned on insert and never evicted; ids are assigned in
/// first-seen order, so iteration order is deterministic for a fixed build
/// sequence. Const member functions never mutate, so concurrent readers are
/// safe once writers are done.
class Graph {
 public:
  using Pattern = std::array<std::optional<TermId>, 3>;

  TermId intern(const Term& t);
  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Returns 1 if the triple was added, 0 if it was already present.
  std::size_t insert(const Triple& t);
  bool insert(IdTriple t);
  std::size_t erase(const Triple& t);
  void insert_all(const Graph& other, std::string_view blank_prefix = {});

  bool contains(const Triple& t) const;
  bool contains(IdTriple t) const { return spo_.contains(t); }

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  /// Unbound positions are wildcards.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Visits id triples matching the pattern using the most selective index.
  template <class F>
  void for_each(const Pattern& pattern, F&& visit) const {
    scan_with(best_index(pattern), pattern, visit);
  }

  /// Same as for_each but forces the given index, filtering positions the
  /// index prefix does not cover.
  std::vector<IdTriple> scan(Index index, const Pattern& pattern) const;

  Triple resolve(IdTriple t) const { return {terms_[t.s], terms_[t.p], terms_[t.o]}; }

  /// All triples in SPO id order.
  std::vector<Triple> triples() const;
  const std::set<IdTriple>& id_triples() const noexcept { return spo_; }

  /// Set equality on triples; dictionaries may differ.
  friend bool same_triples(const Graph& a, const Graph& b);

 private:
  static Index best_index(const Pattern& p);

  template <class F>
  void scan_with(Index index, const Pattern& pat, F& visit) const {
    constexpr TermId kMax = std::numeric_limits<TermId>::max();
    // Key layout per index: spo -> (s,p,o), pos -> (p,o,s), osp -> (o,s,p).
    auto run = [&](const std::set<IdTriple>& set, int a, int b, int c, auto to_spo) {
      IdTriple lo{pat[a].value_or(0), 0, 0};
      IdTriple hi{pat[a].value_or(kMax), kMax, kMax};
      if (pat[a] && pat[b]) {
        lo.p = hi.p = *pat[b];
        if (pat[c]) lo.o = hi.o = *pat[c];
      }
      for (auto it = set.lower_bound(lo); it != set.end() && !(hi < *it); ++it) {
        const IdTriple t = to_spo(*it);
        if ((!pat[0] || t.s == *pat[0]) && (!pat[1] || t.p == *pat[1]) &&
            (!pat[2] || t.o == *pat[2])) {
          visit(t);
        }
      }
    };
    switch (index) {
      case Index::spo:
        run(spo_, 0, 1, 2, [](IdTriple k) { return k; });
        break;
      case Index::pos:
        run(pos_, 1, 2, 0, [](IdTriple k) { return IdTriple{k.o, k.s, k.p}; });
        break;
      case Index::osp:
        run(osp_, 2, 0, 1, [](IdTriple k) { return IdTriple{k.p, k.o, k.s}; });
        break;
    }
  }

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::set<IdTriple> spo_;
  std::set<IdTriple> pos_;
  std::set<IdTriple> osp_;
};

}  // namespace squap
