// lowtype: exact sl(2)-isotypic decompositions of sl(n) representations.
//
// Exit codes: 0 = success / all checks pass, 1 = a mathematical violation
// was found by a verify run, 2 = usage error.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowtype/branching.hpp"
#include "lowtype/embedding.hpp"
#include "lowtype/json_io.hpp"
#include "lowtype/render.hpp"
#include "lowtype/runtime.hpp"
#include "lowtype/sl2.hpp"

namespace {

using namespace lowtype;

struct VerifyOutcome {
  std::string text;
  bool violation = false;
};

VerifyOutcome run_hermite(int max, Format format) {
  CheckReport report;
  report.target = "hermite";
  report.params = {{"max", std::to_string(max)}};
  for (int m = 0; m <= max; ++m) {
    for (int d = 0; d <= max; ++d) {
      ++report.checked;
      if (!hermite_check(m, d)) {
        report.violations.push_back(std::to_string(m) + "," + std::to_string(d));
      }
    }
  }
  return {render_check_report(report, format), !report.violations.empty()};
}

VerifyOutcome run_closed_form(int max, int workers, Format format) {
  CheckReport report;
  report.target = "closed-form";
  report.params = {{"max", std::to_string(max)}};
  const int side = max + 1;
  std::vector<std::uint8_t> bad(static_cast<std::size_t>(side) * side, 0);
  parallel_for(static_cast<std::int64_t>(side) * side, effective_workers(workers),
               [&](std::int64_t i) {
                 const int m = static_cast<int>(i / side);
                 const int d = static_cast<int>(i % side);
                 if (lowest_type(m, d) != lowest_type_closed_form(m, d)) {
                   bad[static_cast<std::size_t>(i)] = 1;
                 }
               });
  report.checked = static_cast<long long>(side) * side;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(bad.size()); ++i) {
    if (bad[static_cast<std::size_t>(i)]) {
      const int m = static_cast<int>(i / side);
      const int d = static_cast<int>(i % side);
      report.violations.push_back(std::to_string(m) + "," + std::to_string(d) + ": direct " +
                                  std::to_string(lowest_type(m, d)) + " vs closed " +
                                  std::to_string(lowest_type_closed_form(m, d)));
    }
  }
  return {render_check_report(report, format), !report.violations.empty()};
}

VerifyOutcome run_semigroup(int pairs, int max_size, int max_n, std::uint64_t seed,
                            Format format) {
  CheckReport report;
  report.target = "semigroup";
  report.params = {{"pairs", std::to_string(pairs)},
                   {"max_size", std::to_string(max_size)},
                   {"max_n", std::to_string(max_n)},
                   {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    // Raw modulus keeps the stream identical across standard libraries.
    const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2));
    const auto pool = partitions_with_at_most(max_size, n - 1);
    const Partition l1 = pool[static_cast<std::size_t>(rng() % pool.size())];
    const Partition l2 = pool[static_cast<std::size_t>(rng() % pool.size())];
    ++report.checked;
    if (!semigroup_check(l1, l2, n)) {
      report.violations.push_back("n=" + std::to_string(n) + " (" + l1.str() + ")+(" + l2.str() +
                                  ")");
    }
  }
  return {render_check_report(report, format), !report.violations.empty()};
}

VerifyOutcome run_oracle(int max_size, int max_n, bool embeddings, int embed_max_size,
                         Format format) {
  CheckReport report;
  report.target = "oracle";
  report.params = {{"max_size", std::to_string(max_size)}, {"max_n", std::to_string(max_n)}};
  for (int n = 2; n <= max_n; ++n) {
    for (const Partition& lambda : partitions_with_at_most(max_size, n - 1)) {
      ++report.checked;
      if (principal_character(lambda, n) != principal_character_oracle(lambda, n)) {
        report.violations.push_back("principal n=" + std::to_string(n) + " (" + lambda.str() +
                                    ")");
      }
    }
  }
  if (embeddings) {
    report.params.emplace_back("embed_max_size", std::to_string(embed_max_size));
    for (int n = 1; n <= max_n; ++n) {
      for (const Partition& blocks : partitions_of(n, n)) {
        const EmbeddingSpec spec(blocks.parts());
        const auto weights = embedding_weights(spec);
        for (const Partition& lambda :
             partitions_with_at_most(embed_max_size, std::max(n - 1, 0))) {
          ++report.checked;
          if (embedding_character(lambda, spec) != ssyt_character(lambda, weights)) {
            report.violations.push_back("embedding " + spec.str() + " (" + lambda.str() + ")");
          }
        }
      }
    }
  }
  return {render_check_report(report, format), !report.violations.empty()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sl(2)-isotypic decompositions of sl(n) representations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "json";
  app.add_option("--format", format_text, "Output format: json, csv, md, plain")
      ->capture_default_str();

  int exit_code = 0;
  std::string output;

  // decompose <sym|ext> <a> <d>
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose S^a(F_d) or Lambda^a(F_d)");
  dec_cmd->fallthrough();
  std::string dec_kind;
  int dec_a = 0, dec_d = 0;
  bool dec_character = false;
  dec_cmd->add_option("kind", dec_kind, "sym or ext")
      ->required()
      ->check(CLI::IsMember({"sym", "ext"}));
  dec_cmd->add_option("a", dec_a, "power")->required()->check(CLI::NonNegativeNumber);
  dec_cmd->add_option("d", dec_d, "highest weight of F_d")
      ->required()
      ->check(CLI::NonNegativeNumber);
  dec_cmd->add_flag("--with-character", dec_character, "Include the character polynomial");
  dec_cmd->callback([&] {
    const LaurentPoly character =
        dec_kind == "sym" ? sym_power_character(dec_a, dec_d) : ext_power_character(dec_a, dec_d);
    output = render_decomposition(decompose(character), parse_format(format_text), dec_character);
  });

  // table --max-m M --max-d D
  auto* table_cmd = app.add_subcommand("table", "Grid of lowest types l(m,d)");
  table_cmd->fallthrough();
  int table_max_m = 15, table_max_d = 15;
  table_cmd->add_option("--max-m", table_max_m, "Largest row m")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--max-d", table_max_d, "Largest column d")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  table_cmd->callback(
      [&] { output = render_table(table_max_m, table_max_d, parse_format(format_text)); });

  // restrict --lambda L (--n N | --composition C)
  auto* res_cmd = app.add_subcommand("restrict", "Restrict L(lambda) to an sl(2)-subalgebra");
  res_cmd->fallthrough();
  std::string res_lambda;
  int res_n = 0;
  std::string res_composition;
  bool res_character = false;
  res_cmd->add_option("--lambda", res_lambda, "Partition, e.g. 2,1")->required();
  auto* res_n_opt = res_cmd->add_option("--n", res_n, "Principal embedding into sl(n)");
  auto* res_comp_opt =
      res_cmd->add_option("--composition", res_composition, "Block sizes, e.g. 2,1");
  res_n_opt->excludes(res_comp_opt);
  res_cmd->add_flag("--with-character", res_character, "Include the character polynomial");
  res_cmd->callback([&] {
    const Partition lambda = Partition::parse(res_lambda);
    const Format format = parse_format(format_text);
    if (res_n_opt->count() > 0) {
      output = render_restriction(res_lambda, "n", std::to_string(res_n),
                                  restrict_to_principal(lambda, res_n), format, res_character);
    } else if (res_comp_opt->count() > 0) {
      const EmbeddingSpec spec = EmbeddingSpec::parse(res_composition);
      output = render_restriction(res_lambda, "composition", spec.str(),
                                  restrict_via_embedding(lambda, spec), format, res_character);
    } else {
      throw CLI::RequiredError("--n or --composition");
    }
  });

  // verify <target> ...
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive or randomized check");
  verify_cmd->fallthrough();
  verify_cmd->require_subcommand(1);

  auto* bound_cmd = verify_cmd->add_subcommand("bound", "Minimal-dimension sweep");
  bound_cmd->fallthrough();
  int bound_n = 0, bound_boxes = 8, bound_workers = 0;
  std::string bound_composition;
  auto* bound_n_opt = bound_cmd->add_option("--n", bound_n, "Principal embedding into sl(n)");
  auto* bound_comp_opt =
      bound_cmd->add_option("--composition", bound_composition, "Block sizes, e.g. 2,1");
  bound_n_opt->excludes(bound_comp_opt);
  bound_cmd->add_option("--max-boxes", bound_boxes, "Partition size bound")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bound_cmd->add_option("--workers", bound_workers, "Worker threads (0 = WORKERS env or cores)")
      ->check(CLI::NonNegativeNumber);
  bound_cmd->callback([&] {
    BoundReport report;
    if (bound_n_opt->count() > 0) {
      report = verify_bound(bound_n, bound_boxes, bound_workers);
    } else if (bound_comp_opt->count() > 0) {
      report =
          verify_bound_embedding(EmbeddingSpec::parse(bound_composition), bound_boxes,
                                 bound_workers);
    } else {
      throw CLI::RequiredError("--n or --composition");
    }
    output = render_bound_report(report, parse_format(format_text));
    if (!report.violations.empty()) exit_code = 1;
  });

  auto* hermite_cmd = verify_cmd->add_subcommand("hermite", "S^m(F_d) vs S^d(F_m) characters");
  hermite_cmd->fallthrough();
  int hermite_max = 20;
  hermite_cmd->add_option("--max", hermite_max, "Largest m and d")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  hermite_cmd->callback([&] {
    auto outcome = run_hermite(hermite_max, parse_format(format_text));
    output = std::move(outcome.text);
    if (outcome.violation) exit_code = 1;
  });

  auto* closed_cmd =
      verify_cmd->add_subcommand("closed-form", "Direct lowest type vs closed form");
  closed_cmd->fallthrough();
  int closed_max = 40, closed_workers = 0;
  closed_cmd->add_option("--max", closed_max, "Largest m and d")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  closed_cmd->add_option("--workers", closed_workers, "Worker threads")
      ->check(CLI::NonNegativeNumber);
  closed_cmd->callback([&] {
    auto outcome = run_closed_form(closed_max, closed_workers, parse_format(format_text));
    output = std::move(outcome.text);
    if (outcome.violation) exit_code = 1;
  });

  auto* semi_cmd = verify_cmd->add_subcommand("semigroup", "Randomized additivity check");
  semi_cmd->fallthrough();
  int semi_pairs = 500, semi_max_size = 6, semi_max_n = 5;
  std::uint64_t semi_seed = 20240803;
  semi_cmd->add_option("--pairs", semi_pairs, "Number of random pairs")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  semi_cmd->add_option("--max-size", semi_max_size, "Largest |lambda|")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  semi_cmd->add_option("--max-n", semi_max_n, "Largest n")
      ->capture_default_str()
      ->check(CLI::Range(3, 1 << 20));
  semi_cmd->add_option("--seed", semi_seed, "RNG seed")->capture_default_str();
  semi_cmd->callback([&] {
    auto outcome =
        run_semigroup(semi_pairs, semi_max_size, semi_max_n, semi_seed, parse_format(format_text));
    output = std::move(outcome.text);
    if (outcome.violation) exit_code = 1;
  });

  auto* oracle_cmd =
      verify_cmd->add_subcommand("oracle", "Closed computations vs tableau enumeration");
  oracle_cmd->fallthrough();
  int oracle_max_size = 8, oracle_max_n = 5, oracle_embed_size = 6;
  bool oracle_embeddings = false;
  oracle_cmd->add_option("--max-size", oracle_max_size, "Largest |lambda|")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--max-n", oracle_max_n, "Largest n")
      ->capture_default_str()
      ->check(CLI::Range(2, 1 << 20));
  oracle_cmd->add_flag("--embeddings", oracle_embeddings,
                       "Also check Jacobi-Trudi embedding characters");
  oracle_cmd->add_option("--embed-max-size", oracle_embed_size,
                         "Largest |lambda| for the embedding check")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->callback([&] {
    auto outcome = run_oracle(oracle_max_size, oracle_max_n, oracle_embeddings, oracle_embed_size,
                              parse_format(format_text));
    output = std::move(outcome.text);
    if (outcome.violation) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << output;
  return exit_code;
}
