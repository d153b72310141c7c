#pragma once

// Command-line front end: gen, verify, bench, lemmas.
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdint>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "instance.hpp"
#include "lemmas.hpp"
#include "verify.hpp"

namespace shufflemerge::harness {

inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-place stable merge via the perfect shuffle: verification and benchmarks",
               "shufflemerge"};
  app.require_subcommand(1);

  std::string kind_name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t alphabet = 4;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a merge instance file");
  gen->add_option("--kind", kind_name, "random | adversarial | dupes")
      ->required()
      ->check(CLI::IsMember({"random", "adversarial", "dupes"}));
  auto* n_opt = gen->add_option("--n", n, "Total length (random, dupes)");
  auto* k_opt = gen->add_option("--k", k, "Left run length for random (default n/2)");
  auto* m_opt = gen->add_option("--m", m, "Adversarial size parameter (n = 4m)");
  gen->add_option("--alphabet", alphabet, "Key alphabet size for dupes")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--out", out_path, "Output file")->required();

  std::size_t exhaustive_max = 0;
  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check merges against the buffered oracle");
  auto* ex_opt = verify->add_option("--exhaustive-max", exhaustive_max,
                                    "Check every distinct-key instance up to this total length")
                     ->check(CLI::Range(0, 20));
  auto* file_opt = verify->add_option("--file", verify_file, "Check one instance file");
  ex_opt->excludes(file_opt);
  file_opt->excludes(ex_opt);

  std::string kinds_list;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::size_t reps = 1;
  std::uint64_t bench_seed = 0;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Write instrumented merge costs as CSV");
  bench->add_option("--kinds", kinds_list, "Comma-separated kinds")->required();
  bench->add_option("--min-n", min_n, "Smallest total length")->required()->check(CLI::PositiveNumber);
  bench->add_option("--max-n", max_n, "Largest total length")->required()->check(CLI::PositiveNumber);
  bench->add_option("--reps", reps, "Repetitions per size")->required()->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Base seed")->required();
  bench->add_option("--csv", csv_path, "Output CSV file")->required();

  std::size_t lemma_n = 0;
  std::size_t lemma_reps = 0;
  std::uint64_t lemma_seed = 0;
  auto* lemmas = app.add_subcommand("lemmas", "Monte Carlo check of the scan and buffer tail bounds");
  lemmas->add_option("--n", lemma_n, "Total length (>= 64)")->required()->check(CLI::Range(std::size_t{64}, std::size_t{1} << 30));
  lemmas->add_option("--reps", lemma_reps, "Instances (>= 1000)")->required()->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 30));
  lemmas->add_option("--seed", lemma_seed, "Base seed")->required();

  auto usage_error = [&](const std::string& msg) {
    err << "error: " << msg << "\n" << app.help();
    return 2;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  try {
    if (*gen) {
      const auto kind = *parse_kind(kind_name);
      Instance inst;
      switch (kind) {
        case Kind::random:
          if (n_opt->count() == 0) return usage_error("gen --kind random needs --n");
          inst = gen_random(n, k_opt->count() > 0 ? k : n / 2, seed);
          break;
        case Kind::adversarial:
          if (m_opt->count() == 0 || m == 0) return usage_error("gen --kind adversarial needs --m >= 1");
          inst = gen_adversarial(m);
          inst.seed = seed;
          break;
        case Kind::dupes:
          if (n_opt->count() == 0) return usage_error("gen --kind dupes needs --n");
          inst = gen_duplicates(n, alphabet, seed);
          break;
      }
      write_instance_file(out_path, inst);
      out << "wrote " << inst.left.size() << "+" << inst.right.size() << " keys to " << out_path << "\n";
      return 0;
    }

    if (*verify) {
      if (ex_opt->count() == 0 && file_opt->count() == 0) {
        return usage_error("verify needs --exhaustive-max N or --file FILE");
      }
      if (ex_opt->count() > 0) {
        const auto report = verify_exhaustive(exhaustive_max);
        if (!report.ok()) {
          const auto& bad = report.counterexamples.front();
          std::string flat = serialize(bad);
          for (auto& ch : flat) if (ch == '\n') ch = '|';
          err << "FAIL: " << report.diagnostic << "; instance: " << flat << "\n";
          return 1;
        }
        out << report.failures << " failures, " << report.instances << " instances\n";
        return 0;
      }
      const auto inst = read_instance_file(verify_file);
      const auto outcome = verify_instance(inst);
      if (!outcome.ok) {
        err << "FAIL: " << verify_file << ": " << outcome.diagnostic << "\n";
        return 1;
      }
      out << "ok: " << verify_file << " (" << inst.size() << " keys)\n";
      return 0;
    }

    if (*bench) {
      BenchConfig cfg;
      std::stringstream ss(kinds_list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto kind = parse_kind(item);
        if (!kind) return usage_error("unknown kind '" + item + "'");
        cfg.kinds.push_back(*kind);
      }
      if (cfg.kinds.empty()) return usage_error("bench needs at least one kind");
      if (min_n > max_n) return usage_error("--min-n must not exceed --max-n");
      cfg.min_n = min_n;
      cfg.max_n = max_n;
      cfg.reps = reps;
      cfg.seed = bench_seed;

      std::ofstream csv(csv_path);
      if (!csv) {
        err << "error: cannot open '" << csv_path << "' for writing\n";
        return 1;
      }
      write_csv_header(csv);
      std::vector<BenchRecord> records;
      run_bench(cfg, [&](const BenchRecord& r) {
        write_csv_row(csv, r);
        records.push_back(r);
      });
      csv.flush();
      if (!csv) {
        err << "error: write failed for '" << csv_path << "'\n";
        return 1;
      }
      out << "wrote " << records.size() << " rows to " << csv_path << "\n";
      for (const Kind kind : cfg.kinds) {
        std::vector<BenchRecord> subset;
        for (const auto& r : records) if (r.kind == kind) subset.push_back(r);
        try {
          const auto fit = fit_exponent(subset, CostField::comparisons_plus_moves);
          out << to_string(kind) << ": exponent(comparisons+moves)=" << fit.exponent
              << " r2=" << fit.r2 << " points=" << fit.points << "\n";
        } catch (const std::invalid_argument&) {
          out << to_string(kind) << ": fewer than 3 sizes, no fit\n";
        }
      }
      return 0;
    }

    if (*lemmas) {
      const auto report = lemma_stats(lemma_n, lemma_reps, lemma_seed);
      print_lemma_report(out, report);
      if (!report.ok()) {
        err << "FAIL: empirical loop statistics exceed their bounds\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand");
}

}  // namespace shufflemerge::harness
