#include "squap/graph.hpp"

#include <algorithm>
#include <string>

#include "squap/error.hpp"

namespace squap {

TermId Graph::intern(const Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> Graph::lookup(const Term& t) const {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  return std::nullopt;
}

std::size_t Graph::insert(const Triple& t) {
  check_well_formed(t);
  return insert(IdTriple{intern(t.subject), intern(t.predicate), intern(t.object)}) ? 1 : 0;
}

bool Graph::insert(IdTriple t) {
  if (!spo_.insert(t).second) return false;
  pos_.insert({t.p, t.o, t.s});
  osp_.insert({t.o, t.s, t.p});
  return true;
}

std::size_t Graph::erase(const Triple& t) {
  const auto s = lookup(t.subject);
  const auto p = lookup(t.predicate);
  const auto o = lookup(t.object);
  if (!s || !p || !o) return 0;
  if (spo_.erase({*s, *p, *o}) == 0) return 0;
  pos_.erase({*p, *o, *s});
  osp_.erase({*o, *s, *p});
  return 1;
}

void Graph::insert_all(const Graph& other, std::string_view blank_prefix) {
  std::vector<TermId> remap(other.terms_.size());
  for (TermId i = 0; i < other.terms_.size(); ++i) {
    const Term& t = other.terms_[i];
    if (t.is_blank() && !blank_prefix.empty()) {
      remap[i] = intern(Term::blank(std::string(blank_prefix) + t.value));
    } else {
      remap[i] = intern(t);
    }
  }
  for (const IdTriple& t : other.spo_) insert(IdTriple{remap[t.s], remap[t.p], remap[t.o]});
}

bool Graph::contains(const Triple& t) const {
  const auto s = lookup(t.subject);
  const auto p = lookup(t.predicate);
  const auto o = lookup(t.object);
  return s && p && o && spo_.contains({*s, *p, *o});
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  Pattern pattern;
  const std::optional<Term>* bound[3] = {&s, &p, &o};
  for (int i = 0; i < 3; ++i) {
    if (!*bound[i]) continue;
    pattern[i] = lookup(**bound[i]);
    if (!pattern[i]) return {};
  }
  std::vector<Triple> out;
  for_each(pattern, [&](IdTriple t) { out.push_back(resolve(t)); });
  return out;
}

std::vector<IdTriple> Graph::scan(Index index, const Pattern& pattern) const {
  std::vector<IdTriple> out;
  auto visit = [&](IdTriple t) { out.push_back(t); };
  scan_with(index, pattern, visit);
  return out;
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const IdTriple& t : spo_) out.push_back(resolve(t));
  return out;
}

bool same_triples(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.spo_.begin(), a.spo_.end(),
                     [&](const IdTriple& t) { return b.contains(a.resolve(t)); });
}

Index Graph::best_index(const Pattern& p) {
  if (p[0] && !p[1] && p[2]) return Index::osp;
  if (p[0]) return Index::spo;
  if (p[1]) return Index::pos;
  if (p[2]) return Index::osp;
  return Index::spo;
}

}  // namespace squap
