#ifndef COLPART_CLASSIFIER_HPP_
#define COLPART_CLASSIFIER_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "colpart/category.hpp"
#include "colpart/named.hpp"

namespace colpart {

/// The families of globally colorized categories.
enum class Family : std::uint8_t {
  O_glob,
  H_glob,
  S_glob,
  B_glob,
  B_prime_glob,
  O_grp_glob,
  H_grp_glob,
  S_grp_glob,
  B_grp_glob,
  O_hl_glob,
  H_hl_glob,
  B_hl_glob,
  H_pi,
  H_pi_inf,
  H_A,
};

inline constexpr std::array<Family, 15> all_families{
    Family::O_glob,     Family::H_glob,     Family::S_glob,
    Family::B_glob,     Family::B_prime_glob, Family::O_grp_glob,
    Family::H_grp_glob, Family::S_grp_glob, Family::B_grp_glob,
    Family::O_hl_glob,  Family::H_hl_glob,  Family::B_hl_glob,
    Family::H_pi,       Family::H_pi_inf,   Family::H_A};

inline char const* family_name(Family f) noexcept {
  switch (f) {
    case Family::O_glob:
      return "O_glob";
    case Family::H_glob:
      return "H_glob";
    case Family::S_glob:
      return "S_glob";
    case Family::B_glob:
      return "B_glob";
    case Family::B_prime_glob:
      return "B'_glob";
    case Family::O_grp_glob:
      return "O_grp,glob";
    case Family::H_grp_glob:
      return "H_grp,glob";
    case Family::S_grp_glob:
      return "S_grp,glob";
    case Family::B_grp_glob:
      return "B_grp,glob";
    case Family::O_hl_glob:
      return "O_hl,glob";
    case Family::H_hl_glob:
      return "H_hl,glob";
    case Family::B_hl_glob:
      return "B_hl,glob";
    case Family::H_pi:
      return "H_pi";
    case Family::H_pi_inf:
      return "H_pi";
    case Family::H_A:
      return "H_A";
  }
  return "?";
}

/// Whether the family only exists for even k.
inline bool requires_even_k(Family f) noexcept {
  switch (f) {
    case Family::S_glob:
    case Family::B_prime_glob:
    case Family::S_grp_glob:
    case Family::B_grp_glob:
      return false;
    default:
      return true;
  }
}

/// The non-colored category (without singleton) the family is built from.
inline std::string noncolored_name(Family f, std::optional<int> s = {}) {
  switch (f) {
    case Family::O_glob:
      return "<>";
    case Family::H_glob:
      return "<aaaa>";
    case Family::S_glob:
      return "<aaaa, a|b>";
    case Family::B_glob:
      return "<a|b>";
    case Family::B_prime_glob:
      return "<abcb>";
    case Family::O_grp_glob:
      return "<abab>";
    case Family::H_grp_glob:
      return "<aaaa, abab>";
    case Family::S_grp_glob:
      return "<aaaa, a|b, abab>";
    case Family::B_grp_glob:
      return "<a|b, abab>";
    case Family::O_hl_glob:
      return "<abcabc>";
    case Family::H_hl_glob:
      if (s && *s >= 3) {
        return "<aaaa, abcabc, h_" + std::to_string(*s) + ">";
      }
      return "<aaaa, abcabc>";
    case Family::B_hl_glob:
      return "<a|b, abcabc>";
    case Family::H_pi:
      return "<pi_" + (s ? std::to_string(*s) : std::string("s")) + ">";
    case Family::H_pi_inf:
      return "<pi_l | l >= 1>";
    case Family::H_A:
      return "A (sS_inf-invariant normal subgroup, unidentified)";
  }
  return "?";
}

/// Rows marked as special instances of the group-theoretical family.
inline bool is_group_theoretical_instance(Family f) noexcept {
  return f == Family::H_grp_glob || f == Family::H_hl_glob;
}

enum class Confidence : std::uint8_t { certified, consistent_at_bound };

inline char const* to_string(Confidence c) noexcept {
  return c == Confidence::certified ? "certified" : "consistent-at-bound";
}

struct Table1Row {
  Family family = Family::O_glob;
  int k = 0;
  /// h-parameter of H_hl,glob (0 for the row without h_s) or pi-parameter
  /// of H_pi; absent otherwise.
  std::optional<int> s;
  Confidence confidence = Confidence::certified;

  /// e.g. "O_glob(2)", "H_hl,glob(0,3)", "H_pi(2,inf)".
  std::string label() const {
    std::string out = family_name(family);
    out += "(" + std::to_string(k);
    if (family == Family::H_pi_inf) {
      out += ",inf";
    } else if (s) {
      out += "," + std::to_string(*s);
    }
    return out + ")";
  }

  /// Family and parameters agree (confidence is ignored).
  bool same_row(Table1Row const& o) const {
    return family == o.family && k == o.k && s == o.s;
  }
};

/// Throws ParameterError unless the parameters are admissible for the
/// family.
inline void validate(Table1Row const& row) {
  auto fail = [&](std::string const& why) {
    throw ParameterError(row.label() + ": " + why);
  };
  if (row.k < 0) {
    fail("k must be non-negative");
  }
  if (requires_even_k(row.family) && row.k % 2 != 0) {
    fail("this family needs even k");
  }
  switch (row.family) {
    case Family::H_hl_glob:
      if (!row.s || (*row.s != 0 && *row.s < 3)) {
        fail("s must be 0 or at least 3");
      }
      break;
    case Family::H_pi:
      if (!row.s || *row.s < 2) {
        fail("s must be at least 2");
      }
      break;
    default:
      if (row.s) {
        fail("this family takes no s parameter");
      }
  }
}

struct GeneratorOptions {
  /// H_pi(k,inf) is infinitely generated; pi_l is included while its length
  /// 4l stays within this bound.
  std::size_t max_length = detail::max_packed_length;
  /// Generators of A_0 for H_A(k). The default spans the smallest
  /// group-theoretical category.
  std::vector<Partition> group_generators{named::fourblock_wbwb(),
                                          named::square_central()};
};

namespace detail {
// Generator list of a table row, without checking parameter ranges (the
// coincidence identities are stated for odd k where some rows are not
// admissible).
inline std::vector<Partition> table_generators(Family f, int k,
                                               std::optional<int> s,
                                               GeneratorOptions const& opts) {
  using namespace named;
  std::vector<Partition> g;
  auto base_u = [&] {
    if (k > 0) {
      g.push_back(u(k));
    }
  };
  auto base_s = [&] {
    if (k > 0) {
      g.push_back(named::s(k));
    }
  };
  switch (f) {
    case Family::O_glob:
      base_u();
      break;
    case Family::H_glob:
      base_u();
      g.push_back(fourblock_wbwb());
      break;
    case Family::S_glob:
      base_s();
      g.push_back(fourblock_wbwb());
      g.push_back(singletons_wb());
      break;
    case Family::B_glob:
      base_s();
      g.push_back(singletons_wb());
      break;
    case Family::B_prime_glob:
      base_s();
      g.push_back(positioner_wwbb());
      break;
    case Family::O_grp_glob:
      base_u();
      g.push_back(crossing_wwbb());
      break;
    case Family::H_grp_glob:
      base_u();
      g.push_back(fourblock_wbwb());
      g.push_back(crossing_wwbb());
      break;
    case Family::S_grp_glob:
      base_s();
      g.push_back(fourblock_wbwb());
      g.push_back(singletons_wb());
      g.push_back(crossing_wwbb());
      break;
    case Family::B_grp_glob:
      base_s();
      g.push_back(singletons_wb());
      g.push_back(crossing_wwbb());
      break;
    case Family::O_hl_glob:
      base_u();
      g.push_back(halflib_wwwbbb());
      break;
    case Family::H_hl_glob:
      base_u();
      if (s && *s >= 3) {
        g.push_back(h0(*s));
      }
      g.push_back(fourblock_wbwb());
      g.push_back(halflib_wwwbbb());
      break;
    case Family::B_hl_glob:
      base_s();
      g.push_back(singletons_wb());
      g.push_back(halflib_wwwbbb());
      break;
    case Family::H_pi:
      base_u();
      g.push_back(pi0(s.value_or(2)));
      break;
    case Family::H_pi_inf:
      base_u();
      for (int l = 1; 4 * static_cast<std::size_t>(l) <= opts.max_length;
           ++l) {
        g.push_back(pi0(l));
      }
      break;
    case Family::H_A:
      base_u();
      g.insert(g.end(), opts.group_generators.begin(),
               opts.group_generators.end());
      break;
  }
  g.push_back(glob_pair());
  return g;
}
}  // namespace detail

/// The generators listed for the row. u_0 and s_0 are the empty partition
/// and are left out.
inline std::vector<Partition> generators_of(Table1Row const& row,
                                            GeneratorOptions const& opts = {}) {
  validate(row);
  return detail::table_generators(row.family, row.k, row.s, opts);
}

// ---------------------------------------------------------------------------
// Classification

class NotGloballyColorizedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct Evidence {
  std::string query;  ///< short name of the probe
  Partition partition;
  Membership membership;
  /// Whether the decision consulted this verdict.
  bool used = false;
  /// Set when the decision treated the query as present because the
  /// category has an element of odd length.
  bool implied = false;
};

struct ClassificationReport {
  Table1Row row;
  Degree degree;
  std::string noncolored_family;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;

  Evidence const* find(std::string const& query) const {
    for (auto const& e : evidence) {
      if (e.query == query) {
        return &e;
      }
    }
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "family: " << row.label() << "\n";
    out << "parameters: k=" << row.k;
    if (row.family == Family::H_pi_inf) {
      out << " s=inf";
    } else if (row.s) {
      out << " s=" << *row.s;
    }
    out << (degree.exact ? "" : " (k not pinned by certificates)") << "\n";
    out << "confidence: " << to_string(row.confidence) << "\n";
    out << "noncolored: " << noncolored_family << "\n";
    if (is_group_theoretical_instance(row.family)) {
      out << "note: (*) group-theoretical instance\n";
    }
    for (auto const& n : notes) {
      out << "note: " << n << "\n";
    }
    out << "evidence:\n";
    out << "  query-word  verdict  certificate?\n";
    for (auto const& e : evidence) {
      out << "  " << render(e.partition) << "  "
          << to_string(e.membership.verdict);
      if (e.membership.no()) {
        out << "  " << e.membership.certificate_name;
      } else if (e.membership.unknown()) {
        out << "  L'=" << e.membership.working_bound;
      } else {
        out << "  -";
      }
      out << "  [" << e.query << (e.used ? ", used" : "")
          << (e.implied ? ", implied by odd length" : "") << "]\n";
    }
    return out.str();
  }
};

class ClassificationInconclusiveError : public Error {
 public:
  explicit ClassificationInconclusiveError(ClassificationReport report)
      : Error("classification inconclusive at the working bound:\n" +
              report.to_text()),
        report_(std::move(report)) {}
  ClassificationReport const& report() const noexcept { return report_; }

 private:
  ClassificationReport report_;
};

struct ClassifierOptions {
  /// Largest s probed for h_s and pi_s.
  int s_max = 4;
};

/// Identifies the table row of a globally colorized bounded category.
inline ClassificationReport classify(BoundedCategory const& cat,
                                     ClassifierOptions const& opts = {}) {
  using namespace named;
  ClassificationReport rep;
  auto probe = [&](std::string name, Partition p) -> std::size_t {
    auto m = contains(cat, p);
    rep.evidence.push_back(Evidence{std::move(name), std::move(p), m});
    return rep.evidence.size() - 1;
  };
  std::size_t const glob = probe("glob-pair", glob_pair());
  if (!rep.evidence[glob].membership.yes()) {
    throw NotGloballyColorizedError(
        "classify: white-pair/black-pair partition is " +
        rep.evidence[glob].membership.describe());
  }
  rep.evidence[glob].used = true;
  rep.degree = degree_of_reflection(cat);

  probe("singleton", singleton_w());
  std::size_t const sing = probe("singletons", singletons_wb());
  std::size_t const four = probe("four-block", fourblock_wbwb());
  std::size_t const cross = probe("crossing", crossing_wwbb());
  std::size_t const hl = probe("half-liberating", halflib_wwwbbb());
  std::size_t const pos = probe("positioner", positioner_wwbb());
  std::vector<std::size_t> hs;  // h0_s for s = 3..s_max
  for (int s = 3; s <= opts.s_max; ++s) {
    hs.push_back(probe("h" + std::to_string(s), h0(s)));
  }
  std::vector<std::size_t> pis;  // pi0_s for s = 2..s_max
  for (int s = 2; s <= opts.s_max; ++s) {
    pis.push_back(probe("pi" + std::to_string(s), pi0(s)));
  }
  std::size_t const sq = probe("square-central", square_central());

  // An element of odd length forces the positioner and hence the pair of
  // singletons into the category.
  bool odd_length = false;
  cat.for_each_stored(cat.working_bound(), [&](detail::Packed p) {
    odd_length = odd_length || (p.length % 2 != 0);
  });

  bool confident = rep.degree.exact;
  auto yes = [&](std::size_t i, bool implied_by_odd = false) {
    auto& e = rep.evidence[i];
    e.used = true;
    if (!e.membership.yes() && implied_by_odd && odd_length) {
      e.implied = true;
      return true;
    }
    if (e.membership.unknown()) {
      confident = false;
    }
    return e.membership.yes();
  };

  int const k = static_cast<int>(rep.degree.k);
  Table1Row row;
  row.k = k;
  bool const c = yes(cross);
  bool const h = yes(hl);
  bool const s2 = yes(sing, true);
  bool const f = yes(four);
  if (rep.evidence[cross].membership.unknown() &&
      rep.evidence[hl].membership.unknown() &&
      rep.evidence[four].membership.unknown() &&
      rep.evidence[sing].membership.unknown() && !odd_length) {
    rep.row = row;
    throw ClassificationInconclusiveError(rep);
  }
  if (c) {
    row.family = s2 ? (f ? Family::S_grp_glob : Family::B_grp_glob)
                    : (f ? Family::H_grp_glob : Family::O_grp_glob);
  } else if (h) {
    if (s2 && f) {
      row.family = Family::S_grp_glob;
      confident = false;
      rep.notes.emplace_back(
          "half-liberating, four-block and singleton pair present; no "
          "half-liberated row has all three, reporting the group row");
    } else if (s2) {
      row.family = k % 2 != 0 ? Family::B_grp_glob : Family::B_hl_glob;
    } else if (f) {
      row.family = Family::H_hl_glob;
      row.s = 0;
      for (std::size_t j = 0; j < hs.size(); ++j) {
        if (yes(hs[j])) {
          row.s = 3 + static_cast<int>(j);
          break;
        }
      }
    } else {
      row.family = Family::O_hl_glob;
    }
  } else if (s2) {
    if (f) {
      row.family = Family::S_glob;
    } else if (bool const p = yes(pos, true); p || k % 2 != 0) {
      row.family = Family::B_prime_glob;
    } else {
      row.family = Family::B_glob;
    }
  } else if (f) {
    if (yes(sq)) {
      row.family = Family::H_A;
      confident = false;
    } else if (pis.empty() || !yes(pis[0])) {
      row.family = Family::H_glob;
    } else {
      // Smallest s with pi_s present and pi_{s+1} not (yet) derived.
      row.family = Family::H_pi_inf;
      for (std::size_t j = 1; j < pis.size(); ++j) {
        if (!yes(pis[j])) {
          row.family = Family::H_pi;
          row.s = 1 + static_cast<int>(j);
          break;
        }
      }
      if (row.family == Family::H_pi_inf) {
        confident = false;
      }
    }
  } else {
    row.family = Family::O_glob;
  }
  row.confidence =
      confident ? Confidence::certified : Confidence::consistent_at_bound;
  rep.row = row;
  rep.noncolored_family = noncolored_name(row.family, row.s);
  if (!rep.degree.exact) {
    rep.notes.emplace_back("k = " + std::to_string(k) +
                           " is the least positive c seen at L' = " +
                           std::to_string(cat.working_bound()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Round trips and coincidences

struct RoundTripResult {
  Table1Row expected;
  std::optional<ClassificationReport> report;
  std::string error;
  bool ok = false;
};

/// Classifies the closure of the row's generators and compares with the
/// row.
inline RoundTripResult round_trip(Table1Row const& row, std::size_t bound,
                                  std::size_t working_bound,
                                  ClassifierOptions const& copts = {},
                                  GeneratorOptions gopts = {}) {
  RoundTripResult r;
  r.expected = row;
  try {
    gopts.max_length = std::min(gopts.max_length, working_bound);
    auto const cat =
        generate_closure(generators_of(row, gopts), bound, working_bound);
    r.report = classify(cat, copts);
    r.ok = r.report->row.same_row(row);
    if (!r.ok) {
      r.error = "classified as " + r.report->row.label();
    }
  } catch (Error const& e) {
    r.error = e.what();
  }
  return r;
}

/// Every admissible row with k in `ks`; H_hl,glob is sampled at s = 0 and
/// s = 3, H_pi at s = 2 and s = 3.
inline std::vector<Table1Row> sample_rows(std::vector<int> const& ks = {0, 1, 2,
                                                                      3, 4}) {
  std::vector<Table1Row> out;
  for (auto f : all_families) {
    for (int k : ks) {
      if (requires_even_k(f) && k % 2 != 0) {
        continue;
      }
      if (f == Family::H_hl_glob) {
        out.push_back({f, k, 0});
        out.push_back({f, k, 3});
      } else if (f == Family::H_pi) {
        out.push_back({f, k, 2});
        out.push_back({f, k, 3});
      } else {
        out.push_back({f, k, std::nullopt});
      }
    }
  }
  return out;
}

struct CoincidenceEntry {
  std::string left;   ///< e.g. "B_glob(1)"
  std::string right;  ///< e.g. "B'_glob(1)"
  int k = 0;
  bool expected_equal = false;
  bool equal = false;
  /// An element of length <= L in one closure and not the other, rendered
  /// with the side it belongs to.
  std::string witness;
  /// Held certificates that differ between the two generator sets.
  std::vector<std::string> certificate_differences;

  /// The bounded data is in line with the expectation: equal when equality
  /// is expected, or a difference witnessed otherwise.
  bool consistent() const {
    return expected_equal ? equal
                          : (!equal || !certificate_differences.empty());
  }
};

struct CoincidenceReport {
  std::size_t bound = 0;
  std::size_t working_bound = 0;
  std::vector<CoincidenceEntry> entries;

  bool all_consistent() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](auto const& e) { return e.consistent(); });
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "coincidences at L=" << bound << " L'=" << working_bound << "\n";
    for (auto const& e : entries) {
      out << "  " << e.left << " vs " << e.right << ": "
          << (e.equal ? "equal" : "different")
          << (e.expected_equal ? " (expected equal)" : " (expected different)");
      if (!e.witness.empty()) {
        out << ", witness " << e.witness;
      }
      for (auto const& c : e.certificate_differences) {
        out << ", certificate " << c;
      }
      out << (e.consistent() ? "  ok" : "  MISMATCH") << "\n";
    }
    return out.str();
  }
};

inline CoincidenceEntry compare_generator_sets(Family a, Family b, int k,
                                               std::size_t bound,
                                               std::size_t working_bound) {
  CoincidenceEntry e;
  e.k = k;
  e.left = Table1Row{a, k}.label();
  e.right = Table1Row{b, k}.label();
  e.expected_equal = k % 2 != 0;
  auto const ga = detail::table_generators(a, k, std::nullopt, {});
  auto const gb = detail::table_generators(b, k, std::nullopt, {});
  auto const ca = generate_closure(ga, bound, working_bound);
  auto const cb = generate_closure(gb, bound, working_bound);
  auto const only_a = ca.element_missing_from(cb, bound);
  auto const only_b = cb.element_missing_from(ca, bound);
  e.equal = !only_a && !only_b;
  if (only_a) {
    e.witness = render(*only_a) + " only in " + e.left;
  } else if (only_b) {
    e.witness = render(*only_b) + " only in " + e.right;
  }
  for (auto c : all_certificates) {
    bool const ha = ca.certificates().holds(c);
    bool const hb = cb.certificates().holds(c);
    if (ha != hb) {
      e.certificate_differences.push_back(
          certificate_name(c, ha ? ca.certificates().divisor()
                                 : cb.certificates().divisor()) +
          " holds only for " + (ha ? e.left : e.right));
    }
  }
  return e;
}

/// Compares B_glob(k) with B'_glob(k) and B_grp,glob(k) with B_hl,glob(k)
/// for k = 1, 2, 3. The pairs coincide for odd k.
inline CoincidenceReport verify_coincidences(std::size_t bound,
                                             std::size_t working_bound,
                                             std::vector<int> ks = {1, 2, 3}) {
  CoincidenceReport r;
  r.bound = bound;
  r.working_bound = working_bound;
  for (int k : ks) {
    r.entries.push_back(compare_generator_sets(
        Family::B_glob, Family::B_prime_glob, k, bound, working_bound));
    r.entries.push_back(compare_generator_sets(
        Family::B_grp_glob, Family::B_hl_glob, k, bound, working_bound));
  }
  return r;
}

// ---------------------------------------------------------------------------
// The table itself

struct TableEntry {
  Family family;
  std::optional<int> s;  ///< 0 or a placeholder for the s-rows
  char const* symbolic;  ///< generator list in the table's notation
  char const* k_range;
};

/// The sixteen rows, in table order.
inline std::vector<TableEntry> table1_entries() {
  return {
      {Family::O_glob, {}, "u_k, aaBB", "2N0"},
      {Family::H_glob, {}, "u_k, aAaA, aaBB", "2N0"},
      {Family::S_glob, {}, "s_k, aAaA, aB, aaBB", "N0"},
      {Family::B_glob, {}, "s_k, aB, aaBB", "2N0"},
      {Family::B_prime_glob, {}, "s_k, abCB, aaBB", "N0"},
      {Family::O_grp_glob, {}, "u_k, abAB, aaBB", "2N0"},
      {Family::H_grp_glob, {}, "u_k, aAaA, abAB, aaBB", "2N0"},
      {Family::S_grp_glob, {}, "s_k, aAaA, aB, abAB, aaBB", "N0"},
      {Family::B_grp_glob, {}, "s_k, aB, abAB, aaBB", "N0"},
      {Family::O_hl_glob, {}, "u_k, abcABC, aaBB", "2N0"},
      {Family::H_hl_glob, 0, "u_k, aAaA, abcABC, aaBB", "2N0"},
      {Family::H_hl_glob, 3, "u_k, h0_s, aAaA, abcABC, aaBB (s >= 3)", "2N0"},
      {Family::B_hl_glob, {}, "s_k, aB, abcABC, aaBB", "2N0"},
      {Family::H_pi, 2, "u_k, pi0_s, aaBB (s >= 2)", "2N0"},
      {Family::H_pi_inf, {}, "u_k, pi0_l (l >= 1), aaBB", "2N0"},
      {Family::H_A, {}, "u_k, A_0, aaBB", "2N0"},
  };
}

}  // namespace colpart

#endif  // COLPART_CLASSIFIER_HPP_
