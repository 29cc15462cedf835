#ifndef COLPART_VERIFY_HPP_
#define COLPART_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "colpart/category.hpp"
#include "colpart/classifier.hpp"
#include "colpart/delta.hpp"
#include "colpart/enumerate.hpp"
#include "colpart/matrix_group.hpp"
#include "colpart/named.hpp"
#include "colpart/relations.hpp"

// Self-checks runnable from the command line. Each suite exercises one group
// of laws against values computed by the library itself.
namespace colpart::verify {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t bound = 6;
  std::size_t working_bound = 10;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const noexcept { return failures.empty(); }

  void check(bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      failures.push_back(what);
    }
  }

  /// Summary line, notes and failures. Timing is left out unless asked for,
  /// so that the text is reproducible.
  std::string to_text(bool with_time = false) const {
    std::ostringstream out;
    out << (passed() ? "PASS" : "FAIL") << "  " << name << "  (" << checks
        << " checks, " << failures.size() << " failed";
    if (with_time) {
      out << ", " << seconds << " s";
    }
    out << ")\n";
    for (auto const& n : notes) {
      out << "  " << n << "\n";
    }
    for (auto const& f : failures) {
      out << "  failed: " << f << "\n";
    }
    return out.str();
  }
};

namespace suites {

inline void worked_examples(SuiteResult& r, SuiteOptions const&) {
  auto const p = parse("AaBBCcA");
  auto const q = parse("AabCBcd");
  auto expect = [&](std::string const& label, std::string const& got,
                    std::string const& want) {
    r.check(got == want, label + ": got " + got + ", expected " + want);
  };
  expect("word p", render(p), "AaBBCcA");
  expect("colors of p", color_string(p), "bwbbbwb");
  Partition const q_built({Color::black, Color::white, Color::white,
                           Color::black, Color::black, Color::white,
                           Color::white},
                          std::vector<std::uint32_t>{0, 0, 1, 2, 1, 2, 3});
  expect("word q", render(q_built), "AabCBcd");
  expect("p tensor q", render(tensor(p, q)), "AaBBCcADdeFEfg");
  expect("contract(p, 2)", render(contract(p, 2)), "AABbA");
  expect("contract(q, 7)", render(contract(q, 7)), "abCBc");
  expect("reflect(p)", render(reflect(p)), "aBbccAa");
  expect("rotate(p)", render(rotate(p)), "AAaBBCc");
  expect("forget_colors(p)", render(forget_colors(p)), "aabbcca");
  std::vector<std::size_t> const a1{1, 1, 3, 3, 6, 6, 1};
  std::vector<std::size_t> const a2{1, 1, 3, 3, 1, 1, 1};
  std::vector<std::size_t> const a3{1, 2, 3, 3, 6, 6, 1};
  r.check(delta(p, a1) == 1, "delta_p(1,1,3,3,6,6,1) = 1");
  r.check(delta(p, a2) == 1, "delta_p(1,1,3,3,1,1,1) = 1");
  r.check(delta(p, a3) == 0, "delta_p(1,2,3,3,6,6,1) = 0");
}

inline void color_laws(SuiteResult& r, SuiteOptions const& o) {
  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < 1000; ++t) {
    auto const p = random_partition(10, rng);
    auto const q = random_partition(10, rng);
    auto const cp = color_sum(p).c;
    auto const w = render(p);
    r.check(color_sum(tensor(p, q)).c == cp + color_sum(q).c,
            "c(p (x) q) = c(p) + c(q) for p = " + w + ", q = " + render(q));
    r.check(color_sum(reflect(p)).c == -cp, "c(reflect p) = -c(p) for " + w);
    if (!p.empty()) {
      r.check(color_sum(rotate(p)).c == cp, "c(rotate p) = c(p) for " + w);
    }
    for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
      if (p.color(i - 1) != p.color(i % p.size())) {
        r.check(color_sum(contract(p, i)).c == cp,
                "c(contract(p, " + std::to_string(i) + ")) = c(p) for " + w);
      }
    }
  }
}

/// Every colored partition of length at most `max_length`.
inline std::vector<Partition> small_fixtures(std::size_t max_length) {
  std::vector<Partition> out;
  for (std::size_t k = 0; k <= max_length; ++k) {
    auto ps = all_partitions(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

inline void delta_functorial(SuiteResult& r, SuiteOptions const&) {
  auto const fixtures = small_fixtures(3);
  for (std::size_t n : {2, 3}) {
    for (auto const& p : fixtures) {
      for (auto const& q : fixtures) {
        r.check(check_tensor(p, q, n), "tensor " + render(p) + " (x) " +
                                           render(q) + " at n = " +
                                           std::to_string(n));
      }
    }
    for (auto const& p : small_fixtures(5)) {
      for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
        if (p.color(i - 1) != p.color(i % p.size())) {
          r.check(check_contraction(p, i, n),
                  "contract " + render(p) + " at " + std::to_string(i) +
                      ", n = " + std::to_string(n));
        }
      }
    }
  }
}

inline void fixspace(SuiteResult& r, SuiteOptions const&) {
  std::vector<Color> const w3(3, Color::white);
  std::vector<Color> const w4(4, Color::white);
  std::size_t const bell3 = all_noncolored_partitions(3).size();
  std::size_t even4 = 0;
  for (auto const& q : all_noncolored_partitions(4)) {
    auto const sizes = q.block_sizes();
    even4 += std::all_of(sizes.begin(), sizes.end(),
                         [](std::size_t s) { return s % 2 == 0; })
                 ? 1
                 : 0;
  }
  auto const s4 = symmetric_group(4);
  auto const h3 = hyperoctahedral_group(3);
  auto const d1 = fixspace_dim(s4, w3);
  auto const d2 = fixspace_dim(h3, w4);
  r.check(d1 == bell3, "dim Fix(S_4, 3 legs) = " + std::to_string(d1) +
                           ", expected " + std::to_string(bell3));
  r.check(d2 == even4, "dim Fix(H_3, 4 legs) = " + std::to_string(d2) +
                           ", expected " + std::to_string(even4));
  r.check(fixspace_dim_by_character(s4, w3) == d1,
          "S_4 character average agrees");
  r.check(fixspace_dim_by_character(h3, w4) == d2,
          "H_3 character average agrees");
  r.notes.push_back("S_4, 3 legs: " + std::to_string(d1) + "; H_3, 4 legs: " +
                    std::to_string(d2));
}

inline void divisibility(SuiteResult& r, SuiteOptions const&) {
  for (long k : {1, 2, 3}) {
    auto const g = scalar_group(2, k);
    for (std::size_t len = 0; len <= 5; ++len) {
      for (auto const& p : all_partitions(len)) {
        bool const want = color_sum(p).c % k == 0;
        r.check(membership_by_fixspace(p, g) == want,
                "scalar group of order " + std::to_string(k) + " on " +
                    render(p));
      }
    }
  }
}

inline void glued_shadow(SuiteResult& r, SuiteOptions const&) {
  auto const g = glued_group(symmetric_group(4), 2);
  r.check(g.order() == 48, "|S_4 x mu_2| = 48");
  for (std::size_t len = 0; len <= 4; ++len) {
    for (auto const& p : all_partitions(len)) {
      bool const want = color_sum(p).c % 2 == 0;
      r.check(membership_by_fixspace(p, g) == want,
              "S_4 x mu_2 on " + render(p));
    }
  }
}

inline void glue2_shadow(SuiteResult& r, SuiteOptions const&) {
  auto const h2 = hyperoctahedral_group(2);
  auto const a = glued_group(h2, 3);
  auto const b = glued_group(h2, 6);
  r.check(a.same_elements(b), "H_2 x mu_3 = H_2 x mu_6 as matrix sets");
  r.check(glued_group(symmetric_group(2), 1).same_elements(symmetric_group(2)),
          "S_2 x mu_1 = S_2");
  r.check(glued_group(symmetric_group(3), 2).order() == 12,
          "|S_3 x mu_2| = 12");
  r.notes.push_back("|H_2 x mu_3| = " + std::to_string(a.order()) +
                    ", |H_2 x mu_6| = " + std::to_string(b.order()));
}

/// Rows whose confidence must come out certified.
inline bool needs_certified(Family f) {
  return f == Family::O_glob || f == Family::B_glob || f == Family::S_glob ||
         f == Family::H_glob;
}

inline void table1_roundtrip(SuiteResult& r, SuiteOptions const& o) {
  for (auto const& row : sample_rows()) {
    auto const rt = round_trip(row, o.bound, o.working_bound);
    bool ok = rt.ok;
    std::string got = rt.report ? rt.report->row.label() + " " +
                                      to_string(rt.report->row.confidence)
                                : rt.error;
    if (ok && needs_certified(row.family) &&
        rt.report->row.confidence != Confidence::certified) {
      ok = false;
    }
    r.check(ok, row.label() + " -> " + got);
    if (ok) {
      r.notes.push_back(row.label() + " -> " + got);
    }
  }
}

inline void coincidences(SuiteResult& r, SuiteOptions const& o) {
  auto const rep = verify_coincidences(o.bound, o.working_bound, {1, 2, 3});
  for (auto const& e : rep.entries) {
    r.check(e.consistent(), e.left + " vs " + e.right);
  }
  std::istringstream lines(rep.to_text());
  for (std::string line; std::getline(lines, line);) {
    r.notes.push_back(line);
  }
}

/// Closure of the zero sector together with u_k or s_k, compared with the
/// closure of the row at the same bounds.
inline bool sector_rebuild_holds(Table1Row const& row, std::size_t bound,
                          std::size_t working_bound, std::string* detail) {
  auto const cat = generate_closure(generators_of(row), bound, working_bound);
  auto gens = zero_sector(cat).representatives(working_bound);
  bool const singletons = contains(cat, named::singletons_wb()).yes();
  gens.push_back(singletons ? named::s(row.k) : named::u(row.k));
  auto const rebuilt = generate_closure(gens, bound, working_bound);
  bool const ok = rebuilt.same_elements(cat, bound);
  if (detail != nullptr) {
    *detail = row.label() + ": <C_0, " + (singletons ? "s_" : "u_") +
              std::to_string(row.k) + "> " + (ok ? "=" : "!=") +
              " C up to length " + std::to_string(bound) + " (" +
              std::to_string(cat.element_count(bound)) + " elements)";
  }
  return ok;
}

inline void sector_rebuild(SuiteResult& r, SuiteOptions const& o) {
  for (auto const& row : {Table1Row{Family::S_glob, 2, std::nullopt},
                          Table1Row{Family::O_glob, 2, std::nullopt}}) {
    std::string detail;
    r.check(sector_rebuild_holds(row, o.bound, o.working_bound, &detail), detail);
    r.notes.push_back(detail);
  }
}

inline void relations(SuiteResult& r, SuiteOptions const& o) {
  auto expect = [&](Partition const& p, std::string const& want) {
    auto const rel = emit(p, 3);
    auto const got = rel.simplified_form.value_or("(none)");
    r.check(got == want, render(p) + ": got " + got);
  };
  expect(parse("aaBB"), "u*[i,j]*u[k,l] = u[i,j]*u*[k,l]");
  expect(named::singletons_wb(), "sum_k u[k,j] = sum_l u[i,l]");
  expect(named::u(4), "u[i1,j1]*u[i2,j2] = u*[i1,j1]*u*[i2,j2]");
  std::mt19937_64 rng(o.seed);
  for (auto const& p : {named::singletons_wb(), named::positioner_wwbb(),
                        named::glob_pair(), named::u(4), named::s(2)}) {
    auto const m = match_template(p);
    std::size_t holds = 0;
    for (int t = 0; t < 50; ++t) {
      auto const g = sampling::mixed_unitary(2 + static_cast<std::size_t>(t % 2),
                                             rng);
      bool const c = evaluate_commutative(p, g);
      holds += c ? 1 : 0;
      r.check(c == evaluate_raw(p, g) && c == evaluate_simplified(*m, g),
              render(p) + " at sample " + std::to_string(t));
    }
    r.notes.push_back(render(p) + ": relation holds at " +
                      std::to_string(holds) + " of 50 samples");
  }
}

}  // namespace suites

using SuiteFn = std::function<void(SuiteResult&, SuiteOptions const&)>;

inline std::vector<std::pair<std::string, SuiteFn>> const& registry() {
  static std::vector<std::pair<std::string, SuiteFn>> const r{
      {"worked-examples", suites::worked_examples},
      {"color-laws", suites::color_laws},
      {"delta-functorial", suites::delta_functorial},
      {"fixspace", suites::fixspace},
      {"divisibility", suites::divisibility},
      {"glued-shadow", suites::glued_shadow},
      {"glue2-shadow", suites::glue2_shadow},
      {"table1-roundtrip", suites::table1_roundtrip},
      {"coincidences", suites::coincidences},
      {"sector-rebuild", suites::sector_rebuild},
      {"relations", suites::relations},
  };
  return r;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto const& [name, fn] : registry()) {
    out.push_back(name);
  }
  return out;
}

/// Runs one suite; ParameterError for an unknown name. Exceptions from the
/// suite body are recorded as failures.
inline SuiteResult run_suite(std::string const& name,
                             SuiteOptions const& options = {}) {
  for (auto const& [n, fn] : registry()) {
    if (n != name) {
      continue;
    }
    SuiteResult r;
    r.name = name;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      fn(r, options);
    } catch (Error const& e) {
      r.failures.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    return r;
  }
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace colpart::verify

#endif  // COLPART_VERIFY_HPP_
