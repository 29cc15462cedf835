#ifndef COLPART_CATEGORY_HPP_
#define COLPART_CATEGORY_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "colpart/certificates.hpp"
#include "colpart/detail/packed.hpp"
#include "colpart/named.hpp"
#include "colpart/partition.hpp"

namespace colpart {

struct ClosureOptions {
  /// Once the white-pair/black-pair partition is derived, every element
  /// comes with all recolorings that keep its white count, so the engine
  /// stores one representative per such class. Disable to run the plain
  /// fixpoint on individual colorings.
  bool color_orbits = true;
};

namespace detail {
using PackedSet = std::unordered_set<Packed, PackedHash>;

struct CategoryData {
  std::vector<Partition> generators;
  std::size_t bound = 0;
  std::size_t working_bound = 0;
  CertificateSet certificates;
  bool color_orbits = false;
  PackedSet stored;
};

// Every coloring of `rep` that has the same number of white points.
template <typename F>
void for_each_recoloring(Packed rep, F&& f) {
  std::size_t const n = rep.length;
  int const blacks = std::popcount(rep.blacks);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) == blacks) {
      Packed q = rep;
      q.blacks = static_cast<std::uint16_t>(mask);
      f(q);
    }
  }
}
}  // namespace detail

/// The elements of a category of partitions up to a working length bound,
/// together with the structural certificates its generators satisfy.
class BoundedCategory {
 public:
  explicit BoundedCategory(detail::CategoryData data) : d_(std::move(data)) {}

  std::span<Partition const> generators() const noexcept {
    return d_.generators;
  }
  /// Maximal length of reported elements (L).
  std::size_t bound() const noexcept { return d_.bound; }
  /// Maximal length of elements kept during generation (L').
  std::size_t working_bound() const noexcept { return d_.working_bound; }
  CertificateSet const& certificates() const noexcept {
    return d_.certificates;
  }
  /// True when elements are stored one per class of colorings with equal
  /// white count.
  bool stores_color_orbits() const noexcept { return d_.color_orbits; }
  std::size_t stored_count() const noexcept { return d_.stored.size(); }

  /// Whether `p` is among the derived elements (always false beyond L').
  bool has(Partition const& p) const {
    if (p.size() > d_.working_bound) {
      return false;
    }
    return has_packed(detail::pack(p));
  }

  bool has_packed(detail::Packed p) const {
    if (d_.color_orbits) {
      p = detail::orbit_rep(p);
    }
    return d_.stored.contains(p);
  }

  /// Calls f(Packed) for every stored entry of length <= max_length. In
  /// orbit mode these are class representatives.
  template <typename F>
  void for_each_stored(std::size_t max_length, F&& f) const {
    for (auto const& p : d_.stored) {
      if (p.length <= max_length) {
        f(p);
      }
    }
  }

  /// Calls f(Packed) for every element of length <= max_length.
  template <typename F>
  void for_each_element(std::size_t max_length, F&& f) const {
    for_each_stored(max_length, [&](detail::Packed p) {
      if (d_.color_orbits) {
        detail::for_each_recoloring(p, f);
      } else {
        f(p);
      }
    });
  }

  /// All elements of length <= max_length, sorted.
  std::vector<Partition> elements(std::size_t max_length) const {
    std::vector<Partition> out;
    for_each_element(max_length,
                     [&](detail::Packed p) { out.push_back(detail::unpack(p)); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Elements up to the reporting bound L.
  std::vector<Partition> reported_elements() const {
    return elements(d_.bound);
  }

  /// One element per stored entry, sorted.
  std::vector<Partition> representatives(std::size_t max_length) const {
    std::vector<Partition> out;
    for_each_stored(max_length,
                    [&](detail::Packed p) { out.push_back(detail::unpack(p)); });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t element_count(std::size_t max_length) const {
    std::size_t n = 0;
    for_each_element(max_length, [&](detail::Packed) { ++n; });
    return n;
  }

  /// An element of length <= max_length that `other` lacks.
  std::optional<Partition> element_missing_from(BoundedCategory const& other,
                                                std::size_t max_length) const {
    std::optional<Partition> found;
    for_each_element(max_length, [&](detail::Packed p) {
      if (!other.has_packed(p)) {
        auto cand = detail::unpack(p);
        if (!found || cand < *found) {
          found = std::move(cand);
        }
      }
    });
    return found;
  }

  /// Set equality of the elements of length <= max_length.
  bool same_elements(BoundedCategory const& other,
                     std::size_t max_length) const {
    return !element_missing_from(other, max_length) &&
           !other.element_missing_from(*this, max_length);
  }

 private:
  detail::CategoryData d_;
};

enum class Verdict : std::uint8_t { yes, certified_no, unknown_at_bound };

inline char const* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::certified_no:
      return "certified-no";
    case Verdict::unknown_at_bound:
      return "unknown-at-bound";
  }
  return "?";
}

/// Outcome of a membership query against a bounded category.
struct Membership {
  Verdict verdict = Verdict::unknown_at_bound;
  /// The violated certificate for certified_no.
  std::optional<Certificate> certificate;
  std::string certificate_name;
  /// Working bound of the category that answered.
  std::size_t working_bound = 0;

  bool yes() const noexcept { return verdict == Verdict::yes; }
  bool no() const noexcept { return verdict == Verdict::certified_no; }
  bool unknown() const noexcept {
    return verdict == Verdict::unknown_at_bound;
  }
  bool decided() const noexcept { return !unknown(); }

  std::string describe() const {
    switch (verdict) {
      case Verdict::yes:
        return "yes";
      case Verdict::certified_no:
        return "certified-no(" + certificate_name + ")";
      case Verdict::unknown_at_bound:
        return "unknown-at-bound(" + std::to_string(working_bound) + ")";
    }
    return "?";
  }
};

namespace detail {

class ClosureRun {
 public:
  ClosureRun(std::size_t working_bound, bool orbits)
      : bound_(working_bound), orbits_(orbits), by_length_(working_bound + 1) {}

  bool orbits() const noexcept { return orbits_; }
  bool wants_orbits() const noexcept { return saw_glob_pair_; }
  PackedSet& stored() noexcept { return stored_; }

  void add(Packed p) {
    if (orbits_) {
      p = orbit_rep(p);
    }
    if (stored_.insert(p).second) {
      order_.push_back(p);
      if (!orbits_ && p == glob_pair_) {
        saw_glob_pair_ = true;
      }
    }
  }

  /// Processes the worklist. Returns false if it stopped early because the
  /// run should switch to orbit mode.
  bool run(bool stop_on_glob_pair) {
    while (next_ < order_.size()) {
      if (stop_on_glob_pair && saw_glob_pair_) {
        return false;
      }
      process(order_[next_++]);
    }
    return true;
  }

  /// Restarts in orbit mode keeping everything derived so far.
  void switch_to_orbits() {
    PackedSet old;
    old.swap(stored_);
    order_.clear();
    for (auto& v : by_length_) {
      v.clear();
    }
    next_ = 0;
    orbits_ = true;
    for (auto p : old) {
      add(p);
    }
  }

 private:
  void process(Packed e) {
    std::size_t const n = e.length;
    if (n > 0) {
      add(rotate(e));
    }
    add(reflect(e));
    contract_all(e);
    for (std::size_t m = 1; m + n <= bound_; ++m) {
      for (auto f : by_length_[m]) {
        add(tensor(e, f));
        add(tensor(f, e));
      }
    }
    if (n > 0 && 2 * n <= bound_) {
      add(tensor(e, e));
    }
    by_length_[n].push_back(e);
  }

  void contract_all(Packed e) {
    std::size_t const n = e.length;
    if (n < 2) {
      return;
    }
    if (orbits_) {
      int const w = whites(e);
      if (w == 0 || static_cast<std::size_t>(w) == n) {
        return;
      }
      // Any adjacent pair can be given opposite colors within the class.
      for (std::size_t a = 0; a < n; ++a) {
        add(with_whites_first(contract(e, a), w - 1));
      }
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t const b = (a + 1) % n;
      if (((e.blacks >> a) & 1U) != ((e.blacks >> b) & 1U)) {
        add(contract(e, a));
      }
    }
  }

  std::size_t bound_;
  bool orbits_;
  bool saw_glob_pair_ = false;
  Packed glob_pair_ = pack(named::glob_pair());
  PackedSet stored_;
  std::vector<Packed> order_;
  std::size_t next_ = 0;
  std::vector<std::vector<Packed>> by_length_;
};

}  // namespace detail

/// Default working bound: L + max(4, longest generator).
inline std::size_t default_working_bound(std::span<Partition const> gens,
                                         std::size_t bound) {
  std::size_t longest = 4;
  for (auto const& g : gens) {
    longest = std::max(longest, g.size());
  }
  return bound + longest;
}

/// Generates the category spanned by `generators` and the two mixed-color
/// pairs, keeping elements of length at most `working_bound`.
inline BoundedCategory generate_closure(std::span<Partition const> generators,
                                        std::size_t bound,
                                        std::size_t working_bound,
                                        ClosureOptions const& options = {}) {
  if (bound < 2 || working_bound < bound) {
    throw BoundError("generate_closure: need 2 <= L <= L', got L = " +
                     std::to_string(bound) +
                     ", L' = " + std::to_string(working_bound));
  }
  if (working_bound > detail::max_packed_length) {
    throw BoundError("generate_closure: working bound " +
                     std::to_string(working_bound) + " exceeds the engine limit " +
                     std::to_string(detail::max_packed_length));
  }
  for (auto const& g : generators) {
    if (g.size() > working_bound) {
      throw BoundError("generate_closure: generator " + render(g) +
                       " is longer than the working bound " +
                       std::to_string(working_bound));
    }
  }
  auto const glob = named::glob_pair();
  bool const start_in_orbits =
      options.color_orbits &&
      std::find(generators.begin(), generators.end(), glob) != generators.end();
  detail::ClosureRun run(working_bound, start_in_orbits);
  run.add(detail::pack(named::pair_wb()));
  run.add(detail::pack(named::pair_bw()));
  for (auto const& g : generators) {
    run.add(detail::pack(g));
  }
  while (!run.run(options.color_orbits && !run.orbits())) {
    run.switch_to_orbits();
  }
  detail::CategoryData data;
  data.generators.assign(generators.begin(), generators.end());
  data.bound = bound;
  data.working_bound = working_bound;
  data.certificates = CertificateSet::from_generators(generators);
  data.color_orbits = run.orbits();
  data.stored = std::move(run.stored());
  return BoundedCategory(std::move(data));
}

inline BoundedCategory generate_closure(std::vector<Partition> const& generators,
                                        std::size_t bound,
                                        std::size_t working_bound,
                                        ClosureOptions const& options = {}) {
  return generate_closure(std::span<Partition const>(generators), bound,
                          working_bound, options);
}

inline BoundedCategory generate_closure(std::vector<Partition> const& generators,
                                        std::size_t bound) {
  return generate_closure(generators, bound,
                          default_working_bound(generators, bound));
}

/// Tri-valued membership: yes if derived, certified-no if a held certificate
/// is violated, unknown otherwise.
inline Membership contains(BoundedCategory const& cat, Partition const& p) {
  Membership m;
  m.working_bound = cat.working_bound();
  if (cat.has(p)) {
    m.verdict = Verdict::yes;
    return m;
  }
  if (auto c = cat.certificates().violated_by(p)) {
    m.verdict = Verdict::certified_no;
    m.certificate = *c;
    m.certificate_name = cat.certificates().name(*c);
    return m;
  }
  m.verdict = Verdict::unknown_at_bound;
  return m;
}

inline Membership is_globally_colorized(BoundedCategory const& cat) {
  return contains(cat, named::glob_pair());
}

enum class Case : std::uint8_t { O, B, H, S };

inline char const* to_string(Case c) noexcept {
  switch (c) {
    case Case::O:
      return "O";
    case Case::B:
      return "B";
    case Case::H:
      return "H";
    case Case::S:
      return "S";
  }
  return "?";
}

struct CaseReport {
  Case value = Case::O;
  Membership singletons;  ///< white singleton next to black singleton
  Membership fourblock;   ///< four-block colored white, black, white, black
  /// True if a test was unknown at the bound (and counted as absent).
  bool qualified = false;
};

inline CaseReport case_of(BoundedCategory const& cat) {
  CaseReport r;
  r.singletons = contains(cat, named::singletons_wb());
  r.fourblock = contains(cat, named::fourblock_wbwb());
  bool const s = r.singletons.yes();
  bool const f = r.fourblock.yes();
  r.value = s ? (f ? Case::S : Case::B) : (f ? Case::H : Case::O);
  r.qualified = r.singletons.unknown() || r.fourblock.unknown();
  return r;
}

inline std::int64_t c_of(detail::Packed p) noexcept {
  return 2 * static_cast<std::int64_t>(detail::whites(p)) - p.length;
}

struct Degree {
  std::int64_t k = 0;
  /// True when k is provably the degree of reflection of the whole
  /// category, not just of the elements seen at the bound.
  bool exact = false;
};

/// The least positive c(p) over the elements, 0 if there is none.
inline Degree degree_of_reflection(BoundedCategory const& cat) {
  std::int64_t best = 0;
  cat.for_each_stored(cat.working_bound(), [&](detail::Packed p) {
    auto const c = c_of(p);
    if (c > 0 && (best == 0 || c < best)) {
      best = c;
    }
  });
  std::int64_t const d = cat.certificates().divisor();
  // Every element's c is a multiple of d, so attaining d pins the minimum;
  // d = 0 rules out any positive value.
  return Degree{best, best == d};
}

/// The elements with c = 0. Closed under the operations whenever the parent
/// is, since c is additive under tensor and invariant under rotation and
/// contraction.
inline BoundedCategory zero_sector(BoundedCategory const& cat) {
  detail::CategoryData data;
  data.bound = cat.bound();
  data.working_bound = cat.working_bound();
  data.certificates = cat.certificates().restricted_to_zero_sector();
  data.color_orbits = cat.stores_color_orbits();
  cat.for_each_stored(cat.working_bound(), [&](detail::Packed p) {
    if (c_of(p) == 0) {
      data.stored.insert(p);
    }
  });
  return BoundedCategory(std::move(data));
}

/// The category generated by `cat` together with the white pair.
inline BoundedCategory noncolored_join(BoundedCategory const& cat) {
  auto gens = cat.representatives(cat.working_bound());
  gens.push_back(named::pair_ww());
  return generate_closure(gens, cat.bound(), cat.working_bound());
}

/// Shapes of the elements of length <= max_length, sorted.
inline std::vector<NonColoredPartition> psi_image(BoundedCategory const& cat,
                                                  std::size_t max_length) {
  std::unordered_set<NonColoredPartition> shapes;
  cat.for_each_stored(max_length, [&](detail::Packed p) {
    shapes.insert(forget_colors(detail::unpack(p)));
  });
  std::vector<NonColoredPartition> out(shapes.begin(), shapes.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Samples elements of length <= L and random count-preserving permutations
/// of their colors; true iff every permuted partition is an element.
inline bool color_permutation_property(BoundedCategory const& cat,
                                       std::size_t trials,
                                       std::uint64_t seed = 0) {
  if (!is_globally_colorized(cat).yes()) {
    throw PreconditionError(
        "color_permutation_property: category is not globally colorized at "
        "this bound");
  }
  auto const pool = cat.reported_elements();
  if (pool.empty()) {
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    auto const& p = pool[pick(rng)];
    std::vector<Color> colors(p.colors().begin(), p.colors().end());
    std::shuffle(colors.begin(), colors.end(), rng);
    if (!cat.has(Partition(std::move(colors), p.shape()))) {
      return false;
    }
  }
  return true;
}

}  // namespace colpart

#endif  // COLPART_CATEGORY_HPP_
