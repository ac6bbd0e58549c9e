#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mediangle/presentation.hpp"

namespace mediangle {

// Node budget for flip-closure exploration; exceeding it raises
// budget_error (inconclusive, not unequal).
struct RewriteBudget {
  std::size_t max_closure = 1'000'000;
};

enum class MoveKind { reduction, fusion, dihedral };

struct Move {
  MoveKind kind = MoveKind::reduction;
  int pos = 0;
};

namespace detail {

struct WordLess {
  const Presentation* p;
  bool operator()(const Word& a, const Word& b) const { return p->word_less(a, b); }
};

}  // namespace detail

inline Word strip_identities(const Presentation& p, const Word& w, int* stripped = nullptr) {
  p.check_word(w);
  Word out;
  int count = 0;
  for (const Syllable& s : w) {
    if (s.element == 0)
      ++count;
    else
      out.push_back(s);
  }
  if (stripped) *stripped = count;
  return out;
}

// The dihedral move at position pos, if the window there matches
// <a,b>^lambda(u,v) for the edge {u,v} spanned by the first two syllables.
// Returns the rewritten word, or nothing when not applicable.
inline std::optional<Word> try_dihedral(const Presentation& p, const Word& w, int pos) {
  const int n = static_cast<int>(w.size());
  if (pos < 0 || pos + 1 >= n) return std::nullopt;
  const Syllable a = w[pos];
  const Syllable b = w[pos + 1];
  if (a.element == 0 || b.element == 0) return std::nullopt;
  if (a.vertex == b.vertex) return std::nullopt;
  int m = p.lambda(a.vertex, b.vertex);
  if (m < 2 || pos + m > n) return std::nullopt;
  for (int j = 2; j < m; ++j)
    if (!(w[pos + j] == (j % 2 == 0 ? a : b))) return std::nullopt;
  Word out = w;
  for (int j = 0; j < m; ++j) out[pos + j] = (j % 2 == 0 ? b : a);
  return out;
}

inline Word apply_move(const Presentation& p, const Word& w, const Move& m) {
  p.check_word(w);
  const int n = static_cast<int>(w.size());
  switch (m.kind) {
    case MoveKind::reduction: {
      if (m.pos < 0 || m.pos >= n) throw input_error("reduction position out of range");
      if (w[m.pos].element != 0) throw input_error("reduction applies only to identity syllables");
      Word out = w;
      out.erase(out.begin() + m.pos);
      return out;
    }
    case MoveKind::fusion: {
      if (m.pos < 0 || m.pos + 1 >= n) throw input_error("fusion position out of range");
      const Syllable& a = w[m.pos];
      const Syllable& b = w[m.pos + 1];
      if (a.vertex != b.vertex) throw input_error("fusion needs adjacent syllables of one group");
      Word out = w;
      out[m.pos].element = p.group(a.vertex).mul(a.element, b.element);
      out.erase(out.begin() + m.pos + 1);
      return out;
    }
    case MoveKind::dihedral: {
      auto res = try_dihedral(p, w, m.pos);
      if (!res) throw input_error("dihedral move not applicable at position");
      return *res;
    }
  }
  throw input_error("unknown move");
}

// First length-shortening move (reduction or fusion) applicable to w, or
// nothing when w admits none.
inline std::optional<Word> try_shorten(const Presentation& p, const Word& w) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i].element == 0) return apply_move(p, w, {MoveKind::reduction, i});
    if (i + 1 < static_cast<int>(w.size()) && w[i].vertex == w[i + 1].vertex) {
      Word fused = apply_move(p, w, {MoveKind::fusion, i});
      if (fused[i].element == 0) fused = apply_move(p, fused, {MoveKind::reduction, i});
      return fused;
    }
  }
  return std::nullopt;
}

// Closure of w under dihedral relations, in breadth-first order.
inline std::vector<Word> flip_closure(const Presentation& p, const Word& w,
                                      const RewriteBudget& budget = {}) {
  p.check_word(w);
  std::set<Word, detail::WordLess> seen{detail::WordLess{&p}};
  std::deque<Word> queue;
  std::vector<Word> out;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    out.push_back(cur);
    for (int i = 0; i + 1 < static_cast<int>(cur.size()); ++i) {
      auto next = try_dihedral(p, cur, i);
      if (!next) continue;
      if (seen.insert(*next).second) {
        if (seen.size() > budget.max_closure)
          throw budget_error("flip-closure exceeds the configured node budget");
        queue.push_back(std::move(*next));
      }
    }
  }
  return out;
}

// A minimal-length word equal to w: strip identities, then repeatedly walk
// the flip-closure and apply any fusion or reduction a member admits, until
// the closure is clean.
inline Word reduce(const Presentation& p, const Word& w, const RewriteBudget& budget = {}) {
  Word cur = strip_identities(p, w);
  for (;;) {
    bool shortened = false;
    for (const Word& member : flip_closure(p, cur, budget)) {
      if (auto s = try_shorten(p, member)) {
        cur = strip_identities(p, *s);
        shortened = true;
        break;
      }
    }
    if (!shortened) return cur;
  }
}

inline bool is_graphically_reduced(const Presentation& p, const Word& w,
                                   const RewriteBudget& budget = {}) {
  for (const Word& member : flip_closure(p, w, budget))
    if (try_shorten(p, member)) return false;
  return true;
}

// Canonical form: the lexicographically least word, keyed by the sequence
// of (vertex id, element index), in the flip-closure of reduce(p, w).
// Constant on equality classes of the periagroup.
inline Word canonical_form(const Presentation& p, const Word& w,
                           const RewriteBudget& budget = {}) {
  Word r = reduce(p, w, budget);
  Word best = r;
  for (const Word& member : flip_closure(p, r, budget))
    if (p.word_less(member, best)) best = member;
  return best;
}

inline bool words_equal(const Presentation& p, const Word& a, const Word& b,
                        const RewriteBudget& budget = {}) {
  return canonical_form(p, a, budget) == canonical_form(p, b, budget);
}

// Geodesic word length of the element represented by w.
inline int word_length(const Presentation& p, const Word& w, const RewriteBudget& budget = {}) {
  return static_cast<int>(reduce(p, w, budget).size());
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word inverse_word(const Presentation& p, const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->vertex, p.group(it->vertex).inv(it->element)});
  return out;
}

}  // namespace mediangle
