#include "exchange.hh"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "binomial.hh"

namespace kbinom {

std::size_t pair_index(Letter a, Letter b, unsigned m) {
  if (!(1 <= a && a < b && b <= m)) throw_range("pair_index expects 1 <= a < b <= m");
  // Pairs with first letter a start after the (a-1) earlier groups of sizes
  // (m-1), (m-2), ..., (m-a+1).
  std::size_t offset = static_cast<std::size_t>(a - 1) * m - static_cast<std::size_t>(a - 1) * a / 2;
  return offset + (b - a - 1);
}

ExchangeTrace exchange_trace(const Word& w) {
  ExchangeTrace trace;
  trace.root = sorted_representative(w);
  trace.target = w;
  trace.totals.assign(pair_count(w.m), 0);

  Word ell = trace.root;
  auto record = [&](std::size_t pos0, Letter a, Letter b) {
    // pos0 is the 0-based index of the left letter; steps are 1-based.
    trace.steps.push_back(ExchangeStep{pos0 + 1, a, b});
    trace.totals[pair_index(a, b, w.m)]++;
  };

  while (ell != w) {
    // p: length of the longest common prefix; ell = p c x, w = p d y, c < d.
    std::size_t p = 0;
    while (ell.letters[p] == w.letters[p]) ++p;
    const Letter c = ell.letters[p];
    const Letter d = w.letters[p];

    // Locate the leftmost d in c x; everything strictly between c and that d
    // is the block u, whose letters are all smaller than d.
    std::size_t pos_d = p + 1;
    while (ell.letters[pos_d] != d) ++pos_d;

    // Bubble d leftwards over u, one adjacent exchange per step ...
    for (std::size_t q = pos_d; q > p + 1; --q) {
      record(q - 1, ell.letters[q - 1], d);
      std::swap(ell.letters[q - 1], ell.letters[q]);
    }
    // ... then exchange c and d, which extends the common prefix past p.
    record(p, c, d);
    std::swap(ell.letters[p], ell.letters[p + 1]);
  }
  return trace;
}

namespace {

/// The pair coefficients binom(w, ab) for a < b, in pair_index order.
std::vector<std::uint64_t> pair_coefficients(const Word& w) {
  std::vector<std::uint64_t> coef(pair_count(w.m), 0);
  std::vector<std::uint64_t> seen(w.m, 0);
  for (Letter x : w.letters) {
    for (Letter a = 1; a < x; ++a) coef[pair_index(a, x, w.m)] += seen[a - 1];
    seen[x - 1]++;
  }
  return coef;
}

/// Shared search for class2 and its debug tree.  Explores ab -> ba exchanges
/// (a < b) from the sorted representative; a move is allowed only while the
/// current binom(., ab) still exceeds the target value, because the exchange
/// lowers exactly that coefficient by one.  Words are expanded at most once.
template <typename EdgeSink>
std::vector<Word> explore_class2(const Word& w, std::uint64_t budget, EdgeSink&& sink) {
  const std::uint64_t cap = resolve_budget(budget);
  const std::vector<std::uint64_t> target = pair_coefficients(w);

  struct Node {
    Word word;
    std::vector<std::uint64_t> coef;
  };

  Word root = sorted_representative(w);
  std::unordered_set<Word, WordHash> seen{root};
  std::deque<Node> queue;
  queue.push_back(Node{root, pair_coefficients(root)});

  std::vector<Word> members;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.coef == target) members.push_back(node.word);

    for (std::size_t i = 0; i + 1 < node.word.size(); ++i) {
      const Letter a = node.word.letters[i], b = node.word.letters[i + 1];
      if (a >= b) continue;
      const std::size_t pi = pair_index(a, b, w.m);
      if (node.coef[pi] <= target[pi]) continue;  // the exchange would overshoot

      Word child = node.word;
      std::swap(child.letters[i], child.letters[i + 1]);
      sink(node.word, child, a, b);
      if (seen.contains(child)) continue;
      if (seen.size() + 1 > cap)
        throw_budget("generating the class of " + format_word(w) + " exceeds the configured budget of " +
                     std::to_string(cap) + " words");
      seen.insert(child);
      std::vector<std::uint64_t> coef = node.coef;
      coef[pi]--;
      queue.push_back(Node{std::move(child), std::move(coef)});
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<Word> class2(const Word& w, std::uint64_t budget) {
  return explore_class2(w, budget, [](const Word&, const Word&, Letter, Letter) {});
}

std::vector<Class2Edge> class2_tree(const Word& w, std::uint64_t budget) {
  std::vector<Class2Edge> edges;
  explore_class2(w, budget, [&](const Word& parent, const Word& child, Letter a, Letter b) {
    edges.push_back(Class2Edge{parent, child, a, b});
  });
  return edges;
}

}  // namespace kbinom
