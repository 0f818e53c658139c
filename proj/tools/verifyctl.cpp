#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quatlie/branching.hpp"
#include "quatlie/checks.hpp"
#include "quatlie/gradedhodge.hpp"
#include "quatlie/weitzenbock.hpp"

namespace {

using quatlie::RunConfig;

// Exit codes: 0 all checks pass, 1 at least one check fails, 2 configuration
// or usage error.

/// Runs `body` against stdout or the requested file; returns 2 when the file
/// cannot be opened.
int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return 2;
  }
  body(out);
  return 0;
}

int cmd_run(const RunConfig& config, const std::string& out_path,
            const std::string& format) {
  std::vector<quatlie::CheckRecord> records;
  try {
    records = quatlie::run_checks(config);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  const int status = quatlie::all_pass(records) ? 0 : 1;
  const int io = with_output(out_path, [&](std::ostream& os) {
    if (format == "machine") {
      quatlie::write_machine_report(records, os);
    } else {
      quatlie::write_human_report(records, os);
    }
  });
  return io != 0 ? io : status;
}

int cmd_list(const std::string& out_path, const std::string& format) {
  // The catalog is produced by a miniature run so that every listed check is
  // one that actually executes; names and anchors cannot drift from the code.
  RunConfig config;
  config.trials = 2;
  std::vector<quatlie::CheckRecord> records;
  try {
    records = quatlie::run_checks(config);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return with_output(out_path, [&](std::ostream& os) {
    if (format == "machine") {
      for (const quatlie::CheckRecord& r : records) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["check"] = r.name;
        j["anchor"] = r.anchor;
        os << j.dump() << "\n";
      }
    } else {
      for (const quatlie::CheckRecord& r : records) {
        os << r.suite << "/" << r.name << "\n    " << r.anchor << "\n";
      }
      os << records.size() << " checks across " << quatlie::suite_names().size()
         << " suites\n";
    }
  });
}

int cmd_decompose(int n, const std::string& algebra, const std::string& out_path,
                  const std::string& format) {
  try {
    const quatlie::AlgebraTag tag = algebra == "sp"    ? quatlie::sp_n1(n)
                                    : algebra == "u22" ? quatlie::u_2n2(n)
                                                       : quatlie::so_4n4(n);
    const quatlie::DecompositionReport report = quatlie::decompose(tag);
    return with_output(out_path, [&](std::ostream& os) {
      if (format == "machine") {
        nlohmann::ordered_json j;
        j["algebra"] = report.algebra.name();
        j["n"] = n;
        j["total_dim"] = report.total_dim();
        j["summands"] = nlohmann::ordered_json::array();
        for (const quatlie::Summand& s : report.summands) {
          nlohmann::ordered_json entry;
          entry["label"] = s.label;
          entry["dim"] = s.dim();
          j["summands"].push_back(entry);
        }
        j["orthonormality_residual"] = report.orthonormality_residual;
        j["completeness_residual"] = report.completeness_residual;
        j["membership_residual"] = report.membership_residual;
        os << j.dump() << "\n";
      } else {
        os << report.algebra.name() << " (total dim " << report.total_dim() << ")\n";
        for (const quatlie::Summand& s : report.summands) {
          os << "  dim " << s.dim() << "  " << s.label << "\n";
        }
        os << "  orthonormality residual " << report.orthonormality_residual
           << "\n  completeness residual  " << report.completeness_residual
           << "\n  membership residual    " << report.membership_residual << "\n";
      }
    });
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_kernel(int n, bool conjugate, const std::string& out_path,
               const std::string& format) {
  try {
    const quatlie::KernelReport report = quatlie::kernel_report(n, conjugate);
    return with_output(out_path, [&](std::ostream& os) {
      if (format == "machine") {
        nlohmann::ordered_json j;
        j["n"] = report.n;
        j["conjugate"] = report.conjugate;
        j["ambient_dim"] = report.ambient_dim;
        j["kernel_dim"] = report.kernel_dim;
        j["asymmetry"] = report.asymmetry;
        j["threshold"] = report.threshold;
        j["largest_kernel_eigenvalue"] = report.largest_kernel_eigenvalue;
        j["smallest_positive_eigenvalue"] = report.smallest_positive_eigenvalue;
        j["gap_ratio"] = report.gap_ratio;
        j["kernel_basis"] = nlohmann::ordered_json::array();
        for (Eigen::Index r = 0; r < report.kernel_basis.rows(); ++r) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (Eigen::Index c = 0; c < report.kernel_basis.cols(); ++c) {
            row.push_back(report.kernel_basis(r, c));
          }
          j["kernel_basis"].push_back(row);
        }
        os << j.dump() << "\n";
      } else {
        os << "curvature-term null space, n=" << report.n
           << (report.conjugate ? " (conjugate pipeline)" : "") << "\n"
           << "  ambient dim " << report.ambient_dim << ", kernel dim "
           << report.kernel_dim << "\n"
           << "  gram asymmetry " << report.asymmetry << "\n"
           << "  largest kernel eigenvalue " << report.largest_kernel_eigenvalue
           << " (threshold " << report.threshold << ")\n"
           << "  smallest positive eigenvalue " << report.smallest_positive_eigenvalue
           << " (gap ratio " << report.gap_ratio << ")\n"
           << "  orthonormal basis columns in cochain coordinates:\n"
           << report.kernel_basis << "\n";
      }
    });
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_grade(int n, int trials, std::uint64_t seed, const std::string& out_path,
              const std::string& format) {
  try {
    const quatlie::GradingReport report = quatlie::grading_report(n, trials, seed);
    return with_output(out_path, [&](std::ostream& os) {
      if (format == "machine") {
        nlohmann::ordered_json j;
        j["n"] = report.n;
        j["trials"] = report.trials;
        j["complex_dims"] = nlohmann::ordered_json::object();
        for (const auto& [degree, dim] : report.complex_dims) {
          j["complex_dims"][std::to_string(degree)] = dim;
        }
        j["total_complex_dim"] = report.total_complex_dim;
        j["eigen_residual_max"] = report.eigen_residual_max;
        j["reassembly_residual"] = report.reassembly_residual;
        j["bracket_degree_residual"] = report.bracket_degree_residual;
        j["top_bracket_residual"] = report.top_bracket_residual;
        j["zero_pattern_residual"] = report.zero_pattern_residual;
        j["subalgebra_residual"] = report.subalgebra_residual;
        j["gl_image_complex_dims"] = nlohmann::ordered_json::object();
        for (const auto& [degree, dim] : report.gl_image_complex_dims) {
          j["gl_image_complex_dims"][std::to_string(degree)] = dim;
        }
        os << j.dump() << "\n";
      } else {
        os << "graded decomposition of sp(2n+2,C), n=" << report.n << "\n"
           << "  complex dims by degree:";
        for (const auto& [degree, dim] : report.complex_dims) {
          os << " [" << degree << "] " << dim;
        }
        os << "  (total " << report.total_complex_dim << ")\n"
           << "  eigenvector residual   " << report.eigen_residual_max << "\n"
           << "  reassembly residual    " << report.reassembly_residual << "\n"
           << "  bracket additivity     " << report.bracket_degree_residual << "\n"
           << "  out-of-range brackets  " << report.top_bracket_residual << "\n"
           << "  degree-0 block pattern " << report.zero_pattern_residual << "\n"
           << "  filtration closure     " << report.subalgebra_residual << "\n"
           << "  gl(n+1,C) image dims:";
        for (const auto& [degree, dim] : report.gl_image_complex_dims) {
          os << " [" << degree << "] " << dim;
        }
        os << "\n";
      }
    });
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Seeded numerical certification of the quaternionic hyperbolic "
      "linear-algebra constructions"};
  app.require_subcommand(1);

  int rc = 0;

  // run
  RunConfig config;
  std::string run_out;
  std::string run_format = "human";
  CLI::App* run = app.add_subcommand("run", "Execute verification suites");
  run->add_option("--n", config.ranks, "Rank(s) n >= 2 (repeatable)")
      ->check(CLI::Range(2, 64));
  run->add_option("--trials", config.trials, "Random trials per fuzzed check")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", config.seed, "Root seed for all samplers");
  run->add_option("--tol", config.tolerance, "Residual tolerance")
      ->check(CLI::PositiveNumber);
  run->add_option("--suite", config.suites,
                  "Suites to run (repeatable; default all)");
  run->add_option("--out", run_out, "Write the report to this file");
  run->add_option("--format", run_format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  run->callback([&] { rc = cmd_run(config, run_out, run_format); });

  // list
  std::string list_out;
  std::string list_format = "human";
  CLI::App* list = app.add_subcommand("list", "List every check with its anchor");
  list->add_option("--out", list_out, "Write the catalog to this file");
  list->add_option("--format", list_format, "Catalog format")
      ->check(CLI::IsMember({"human", "machine"}));
  list->callback([&] { rc = cmd_list(list_out, list_format); });

  // decompose
  int dec_n = 2;
  std::string dec_algebra = "so44";
  std::string dec_out;
  std::string dec_format = "human";
  CLI::App* dec =
      app.add_subcommand("decompose", "Print an invariant-summand decomposition");
  dec->add_option("--n", dec_n, "Rank n >= 2")->check(CLI::Range(2, 64));
  dec->add_option("--algebra", dec_algebra, "Algebra to decompose")
      ->check(CLI::IsMember({"sp", "u22", "so44"}));
  dec->add_option("--out", dec_out, "Write the report to this file");
  dec->add_option("--format", dec_format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  dec->callback([&] { rc = cmd_decompose(dec_n, dec_algebra, dec_out, dec_format); });

  // kernel
  int ker_n = 2;
  bool ker_conjugate = false;
  std::string ker_out;
  std::string ker_format = "human";
  CLI::App* ker =
      app.add_subcommand("kernel", "Print the curvature-term null-space basis");
  ker->add_option("--n", ker_n, "Rank n >= 2")->check(CLI::Range(2, 8));
  ker->add_flag("--conjugate", ker_conjugate, "Use the conjugate pipeline");
  ker->add_option("--out", ker_out, "Write the report to this file");
  ker->add_option("--format", ker_format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  ker->callback([&] { rc = cmd_kernel(ker_n, ker_conjugate, ker_out, ker_format); });

  // grade
  int gr_n = 2;
  int gr_trials = 100;
  std::uint64_t gr_seed = 42;
  std::string gr_out;
  std::string gr_format = "human";
  CLI::App* gr = app.add_subcommand("grade", "Print the graded-decomposition report");
  gr->add_option("--n", gr_n, "Rank n >= 2")->check(CLI::Range(2, 64));
  gr->add_option("--trials", gr_trials, "Random trials")->check(CLI::PositiveNumber);
  gr->add_option("--seed", gr_seed, "Seed for the sampled certificates");
  gr->add_option("--out", gr_out, "Write the report to this file");
  gr->add_option("--format", gr_format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  gr->callback([&] { rc = cmd_grade(gr_n, gr_trials, gr_seed, gr_out, gr_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
