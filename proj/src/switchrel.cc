#include "switchrel.hh"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace kbinom {

std::vector<Word> switch_neighbors(const Word& w) {
  std::vector<Word> out;
  if (w.size() < 4) return out;

  const auto& u = w.letters;
  // i and j index the left ends of two disjoint adjacent pairs, i + 1 < j.
  for (std::size_t i = 0; i + 3 < u.size(); ++i) {
    const Letter a = u[i], b = u[i + 1];
    if (a == b) continue;
    for (std::size_t j = i + 2; j + 1 < u.size(); ++j) {
      if (u[j] == b && u[j + 1] == a) {
        Word v = w;
        v.letters[i] = b;
        v.letters[i + 1] = a;
        v.letters[j] = a;
        v.letters[j + 1] = b;
        out.push_back(std::move(v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> switch_class(const Word& w, std::uint64_t budget) {
  const std::uint64_t cap = resolve_budget(budget);
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (Word& next : switch_neighbors(current)) {
      if (seen.contains(next)) continue;
      if (seen.size() + 1 > cap)
        throw_budget("the switch class of " + format_word(w) + " exceeds the configured budget of " +
                     std::to_string(cap) + " words");
      queue.push_back(next);
      seen.insert(std::move(next));
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kbinom
