// colpart: command-line front end for the two-colored partition library.
//
//   colpart op <operation> <partition>... [--at i] [--explicit]
//   colpart closure <generator-file> --bound L [--working-bound L'] [--cache dir]
//   colpart classify <generator-file> [--bound L] [--working-bound L']
//   colpart verify <suite>|all [--seed s]
//   colpart emit <partition> [--n dim] [--out file.rel]
//   colpart table1
//
// Exit status: 0 on success, 1 on a domain error or failed check, 2 on a
// usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "colpart/colpart.hpp"

namespace {

using namespace colpart;

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string show(Partition const& p, bool explicit_form) {
  return explicit_form ? to_explicit(p) : render_any(p);
}

int run_op(std::string const& operation, std::vector<std::string> const& args,
           std::optional<std::size_t> at, bool explicit_form) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw UsageError("op " + operation + " takes " + std::to_string(count) +
                       " partition" + (count == 1 ? "" : "s") + ", got " +
                       std::to_string(args.size()));
    }
  };
  std::vector<Partition> ps;
  for (auto const& a : args) {
    ps.push_back(parse_any(a));
  }
  if (operation == "parse") {
    need(1);
    std::cout << show(ps[0], explicit_form) << "\n";
  } else if (operation == "tensor") {
    if (ps.empty()) {
      throw UsageError("op tensor takes at least one partition");
    }
    Partition out;
    for (auto const& p : ps) {
      out = tensor(out, p);
    }
    std::cout << show(out, explicit_form) << "\n";
  } else if (operation == "contract") {
    need(1);
    if (!at) {
      throw UsageError("op contract needs --at");
    }
    std::cout << show(contract(ps[0], *at), explicit_form) << "\n";
  } else if (operation == "reflect") {
    need(1);
    std::cout << show(reflect(ps[0]), explicit_form) << "\n";
  } else if (operation == "rotate") {
    need(1);
    std::cout << show(rotate(ps[0]), explicit_form) << "\n";
  } else if (operation == "color-sum") {
    need(1);
    auto const c = color_sum(ps[0]);
    std::cout << "white=" << c.white << " black=" << c.black << " c=" << c.c
              << "\n";
  } else if (operation == "forget-colors") {
    need(1);
    std::cout << render(forget_colors(ps[0])) << "\n";
  } else if (operation == "colorings") {
    need(1);
    for (auto const& p : colorings(forget_colors(ps[0]))) {
      std::cout << show(p, explicit_form) << "\n";
    }
  } else if (operation == "noncrossing") {
    need(1);
    std::cout << (is_noncrossing(ps[0]) ? "yes" : "no") << "\n";
  } else {
    throw UsageError("unknown operation '" + operation + "'");
  }
  return 0;
}

std::size_t working_bound_or_default(std::vector<Partition> const& gens,
                                     std::size_t bound,
                                     std::optional<std::size_t> wb) {
  return wb ? *wb : default_working_bound(gens, bound);
}

int run_closure(std::string const& file, std::size_t bound,
                std::optional<std::size_t> wb, std::string const& cache,
                bool plain) {
  auto const gens = read_generator_file(file);
  auto const working = working_bound_or_default(gens, bound, wb);
  ClosureOptions opts;
  opts.color_orbits = !plain;
  auto const lines = cached_listing(cache, gens, bound, working, opts);
  auto const certs = CertificateSet::from_generators(gens);
  std::cout << "# L=" << bound << " L'=" << working << " elements="
            << lines.size() << "\n";
  std::cout << "# certificates:";
  for (auto const& n : certs.names()) {
    std::cout << " " << n;
  }
  std::cout << "\n";
  for (auto const& l : lines) {
    std::cout << l << "\n";
  }
  return 0;
}

int run_classify(std::string const& file, std::size_t bound,
                 std::optional<std::size_t> wb, int s_max) {
  auto const gens = read_generator_file(file);
  auto const working = working_bound_or_default(gens, bound, wb);
  auto const cat = generate_closure(gens, bound, working);
  ClassifierOptions opts;
  opts.s_max = s_max;
  std::cout << classify(cat, opts).to_text();
  return 0;
}

int run_verify(std::string const& suite, verify::SuiteOptions const& opts) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    auto const known = verify::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      throw UsageError("unknown suite '" + suite + "'");
    }
    names = {suite};
  }
  bool all_passed = true;
  for (auto const& n : names) {
    auto const r = verify::run_suite(n, opts);
    std::cout << r.to_text();
    all_passed = all_passed && r.passed();
  }
  return all_passed ? 0 : exit_domain;
}

int run_emit(std::string const& word, std::size_t n, std::string const& out) {
  auto const text = to_rel(emit(parse_any(word), n));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return 0;
}

std::string row_pattern(TableEntry const& e) {
  std::string out = family_name(e.family);
  if (e.family == Family::H_pi_inf) {
    return out + "(k,inf)";
  }
  if (e.family == Family::H_hl_glob && e.s == 0) {
    return out + "(k,0)";
  }
  return out + (e.s ? "(k,s)" : "(k)");
}

int run_table1() {
  for (auto const& e : table1_entries()) {
    Table1Row const example{e.family, 2, e.s};
    std::string words;
    for (auto const& g : generators_of(example)) {
      words += (words.empty() ? "" : " ") + render(g);
    }
    std::cout << row_pattern(e) << "  noncolored: "
              << noncolored_name(e.family, e.s) << "  generators: "
              << e.symbolic << "  k in " << e.k_range;
    if (is_group_theoretical_instance(e.family)) {
      std::cout << "  (*) group-theoretical instance";
    }
    std::cout << "\n    " << example.label() << ": " << words << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-colored partitions: operations, closures, classification"};
  app.require_subcommand(1);

  auto* op = app.add_subcommand("op", "apply an operation to partitions");
  std::string operation;
  std::vector<std::string> op_args;
  std::optional<std::size_t> at;
  bool explicit_form = false;
  op->add_option("operation", operation,
                 "parse, tensor, contract, reflect, rotate, color-sum, "
                 "forget-colors, colorings, noncrossing")
      ->required();
  op->add_option("partitions", op_args, "words or explicit forms");
  op->add_option("--at", at, "1-based contraction position");
  op->add_flag("--explicit", explicit_form, "print the explicit block form");

  auto* closure = app.add_subcommand("closure", "list a bounded closure");
  std::string gen_file;
  std::size_t bound = 6;
  std::optional<std::size_t> working;
  std::string cache;
  bool plain = false;
  closure->add_option("generators", gen_file, "generator file")->required();
  closure->add_option("--bound,-L", bound, "reported length bound")
      ->required();
  closure->add_option("--working-bound", working, "generation length bound");
  closure->add_option("--cache", cache, "cache directory");
  closure->add_flag("--no-orbits", plain,
                    "store every coloring instead of color classes");

  auto* classify_cmd =
      app.add_subcommand("classify", "identify the table row of a closure");
  int s_max = 4;
  classify_cmd->add_option("generators", gen_file, "generator file")
      ->required();
  classify_cmd->add_option("--bound,-L", bound, "reported length bound");
  classify_cmd->add_option("--working-bound", working,
                           "generation length bound");
  classify_cmd->add_option("--s-max", s_max, "largest s probed");

  auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
  std::string suite;
  verify::SuiteOptions vopts;
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--seed", vopts.seed, "seed for randomized suites");
  verify_cmd->add_option("--bound,-L", vopts.bound, "reported length bound");
  verify_cmd->add_option("--working-bound", vopts.working_bound,
                         "generation length bound");

  auto* emit_cmd = app.add_subcommand("emit", "print the relation of a partition");
  std::string word;
  std::size_t dim = 3;
  std::string out_file;
  emit_cmd->add_option("partition", word, "word or explicit form")->required();
  emit_cmd->add_option("--n", dim, "matrix dimension");
  emit_cmd->add_option("--out", out_file, "write a .rel file");

  auto* table1 = app.add_subcommand("table1", "print the classification table");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (op->parsed()) {
      return run_op(operation, op_args, at, explicit_form);
    }
    if (closure->parsed()) {
      return run_closure(gen_file, bound, working, cache, plain);
    }
    if (classify_cmd->parsed()) {
      return run_classify(gen_file, bound, working, s_max);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, vopts);
    }
    if (emit_cmd->parsed()) {
      return run_emit(word, dim, out_file);
    }
    if (table1->parsed()) {
      return run_table1();
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (colpart::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (std::filesystem::filesystem_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_usage;
}
