#include "freedense/orbits.hpp"

#include "freedense/density.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace freedense {

ReducedWord WhiteheadAuto::apply(const ReducedWord& w) const {
  Word out;
  for (Letter l : w) {
    const ReducedWord& img = images.at(static_cast<std::size_t>(l.generator()));
    if (l.sign() > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return free_reduce(out);
}

std::string WhiteheadAuto::to_string() const {
  std::string s = kind == Kind::TypeI ? "I(" : "II(";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) s += ",";
    s += Letter(static_cast<int>(i), +1).to_char();
    s += "->";
    s += freedense::to_string(images[i]);
  }
  return s + ")";
}

namespace {

void require_rank(const FreeAlphabet& alphabet) {
  if (alphabet.rank() > 3) throw std::invalid_argument("orbit computations support rank <= 3");
}

ReducedWord rotate(const ReducedWord& w, std::size_t shift) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
  return ReducedWord::from_letters(std::move(r));
}

}  // namespace

std::vector<WhiteheadAuto> whitehead_autos(const FreeAlphabet& alphabet) {
  require_rank(alphabet);
  const int k = alphabet.rank();
  std::vector<WhiteheadAuto> autos;

  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << k); ++mask) {
      WhiteheadAuto a;
      a.kind = WhiteheadAuto::Kind::TypeI;
      a.permutation = perm;
      for (int i = 0; i < k; ++i) {
        const bool inv = ((mask >> i) & 1) != 0;
        a.inverted.push_back(inv);
        a.images.push_back(ReducedWord::from_letters({Letter(perm[i], inv ? -1 : +1)}));
      }
      autos.push_back(std::move(a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int code = 0; code < alphabet.size(); ++code) {
    const Letter m = Letter::from_code(code);
    int combos = 1;
    for (int i = 0; i < k - 1; ++i) combos *= 4;
    for (int c = 1; c < combos; ++c) {
      WhiteheadAuto a;
      a.kind = WhiteheadAuto::Kind::TypeII;
      a.multiplier = m;
      int rest = c;
      for (int x = 0; x < k; ++x) {
        const Letter gx(x, +1);
        if (x == m.generator()) {
          a.choice.push_back(0);
          a.images.push_back(ReducedWord::from_letters({gx}));
          continue;
        }
        const int ch = rest % 4;
        rest /= 4;
        a.choice.push_back(ch);
        Word img;
        if (ch >= 2) img.push_back(m.inverse());
        img.push_back(gx);
        if (ch == 1 || ch == 3) img.push_back(m);
        a.images.push_back(ReducedWord::from_letters(std::move(img)));
      }
      autos.push_back(std::move(a));
    }
  }
  return autos;
}

CountTable OrbitSet::counts_by_length() const {
  CountTable t;
  t.counts.assign(static_cast<std::size_t>(length_bound) + 1, BigInt(0));
  for (const auto& e : elements) t.counts[e.size()] += 1;
  return t;
}

OrbitSet orbit_bfs(const ReducedWord& g, int bound, const FreeAlphabet& alphabet) {
  require_rank(alphabet);
  if (bound > kMaxOrbitBound) {
    throw std::invalid_argument("orbit bound " + std::to_string(bound) + " exceeds the supported maximum " +
                                std::to_string(kMaxOrbitBound));
  }
  const ReducedWord core = cyclic_core(g);
  if (core.empty()) throw std::invalid_argument("the orbit of the trivial element is not supported");
  if (static_cast<int>(core.size()) > bound) {
    throw std::invalid_argument("cyclic length of the base word exceeds the bound");
  }
  const auto autos = whitehead_autos(alphabet);
  OrbitSet orbit{g, bound, {}};
  std::deque<ReducedWord> queue;
  auto visit = [&](const ReducedWord& w) {
    if (static_cast<int>(w.size()) > bound) return;
    if (orbit.elements.insert(w).second) queue.push_back(w);
  };
  visit(core);
  while (!queue.empty()) {
    const ReducedWord w = queue.front();
    queue.pop_front();
    for (std::size_t r = 1; r < w.size(); ++r) visit(rotate(w, r));
    for (const auto& a : autos) visit(cyclic_core(a.apply(w)));
  }
  return orbit;
}

bool is_primitive(const ReducedWord& w, const FreeAlphabet& alphabet) {
  require_rank(alphabet);
  ReducedWord current = cyclic_core(w);
  if (current.empty()) return false;
  const auto autos = whitehead_autos(alphabet);
  while (current.size() > 1) {
    std::optional<ReducedWord> shorter;
    // Search the length-preserving component of `current` for a strict decrease.
    std::set<ReducedWord> seen{current};
    std::deque<ReducedWord> queue{current};
    while (!queue.empty() && !shorter) {
      const ReducedWord v = queue.front();
      queue.pop_front();
      for (const auto& a : autos) {
        ReducedWord image = cyclic_core(a.apply(v));
        if (image.size() < v.size()) {
          shorter = std::move(image);
          break;
        }
        if (image.size() == v.size() && seen.insert(image).second) queue.push_back(std::move(image));
      }
    }
    if (!shorter) return false;
    current = std::move(*shorter);
  }
  return true;
}

bool contains_cyclic_factor(const ReducedWord& w, const ReducedWord& s) {
  if (s.empty()) return true;
  if (s.size() > w.size()) return false;
  Word doubled(w.begin(), w.end());
  doubled.insert(doubled.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.size() - 1));
  return std::search(doubled.begin(), doubled.end(), s.begin(), s.end()) != doubled.end();
}

bool check_blocking(const ReducedWord& s, const ReducedWord& g, int bound, const FreeAlphabet& alphabet) {
  const OrbitSet orbit = orbit_bfs(g, bound, alphabet);
  return std::none_of(orbit.elements.begin(), orbit.elements.end(),
                      [&](const ReducedWord& e) { return contains_cyclic_factor(e, s); });
}

CountTable orbit_closure_counts(const OrbitSet& orbit, const FreeAlphabet& alphabet) {
  return cycred_closure_counts(orbit.counts_by_length(), alphabet, orbit.length_bound).exact;
}

std::vector<Rational> orbit_density_profile(const ReducedWord& g, int bound, const FreeAlphabet& alphabet) {
  const OrbitSet orbit = orbit_bfs(g, bound, alphabet);
  const CountTable counts = orbit_closure_counts(orbit, alphabet);
  std::vector<Rational> profile;
  BigInt cumulative = 0;
  for (int n = 0; n <= bound; ++n) {
    cumulative += counts[static_cast<std::size_t>(n)];
    Rational q(cumulative, count_reduced_ball(alphabet, n));
    q.canonicalize();
    profile.push_back(q);
  }
  return profile;
}

}  // namespace freedense
