// Command-line front end. Exit codes: 0 success, 1 validation or predicate
// failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pshadow/io.hpp"
#include "pshadow/linalg.hpp"

namespace {

using namespace pshadow;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) throw IoError("cannot open " + path);
    src = &in;
  }
  try {
    return Json::parse(*src);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

// Destination for record streams: a file when --out is given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

void check_size(int n) {
  require_supported_size(n, "size");
  if (n > kDefaultMaxSize) {
    std::cerr << "warning: n = " << n << " is beyond the supported range; expect long runtimes\n";
  }
}

// The count goes to stdout when records went to a file, else to stderr so
// stdout stays valid JSON-lines.
void report_count(Output& out, const char* what, std::size_t count) {
  (out.to_file() ? std::cout : std::cerr) << what << ": " << count << "\n";
}

struct Common {
  int workers = 1;
  std::string out;
  bool permutation_only = false;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.workers = workers;
    o.identify_opposite = !permutation_only;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "Enumeration worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_flag("--permutation-only", c.permutation_only,
                "Classify up to relabeling only; do not identify a matrix with its negative");
}

int cmd_shades(int n, const Common& c) {
  check_size(n);
  Output out(c.out);
  std::size_t count = 0;
  enumerate_shades(n, c.enumeration(), [&](const ShadowRecord& r) {
    out.stream() << to_json(r).dump() << "\n";
    ++count;
  });
  out.finish();
  report_count(out, "shades", count);
  return kOk;
}

int cmd_shadows(int n, bool with_certificates, const Common& c) {
  check_size(n);
  Output out(c.out);
  std::size_t count = 0;
  enumerate_shadows(n, c.enumeration(), [&](const ShadowRecord& r) {
    if (with_certificates) {
      out.stream() << to_json(r).dump() << "\n";
    } else {
      ShadowRecord bare = r;
      bare.certificate.reset();
      out.stream() << to_json(bare).dump() << "\n";
    }
    ++count;
  });
  out.finish();
  report_count(out, "shadows", count);
  return kOk;
}

int cmd_check(const std::string& path, const std::string& which) {
  const auto a = skew_matrix_from_json(read_json(path));
  std::vector<std::pair<std::string, bool>> verdicts;
  const bool all = which == "all";
  if (all || which == "tame") verdicts.emplace_back("tame", tame_ok(a));
  if (all || which == "ps1") verdicts.emplace_back("ps1", is_singular(a));
  if (all || which == "ps2") verdicts.emplace_back("ps2", ps2_holds(a));
  if (all || which == "ps3") verdicts.emplace_back("ps3", is_feasible(ps3_decide(a)));
  bool ok = true;
  for (const auto& [name, pass] : verdicts) {
    std::cout << name << ": " << (pass ? "pass" : "fail") << "\n";
    ok &= pass;
  }
  return ok ? kOk : kFailed;
}

int cmd_certify(const std::string& path, const std::string& out_path) {
  const auto a = skew_matrix_from_json(read_json(path));
  Output out(out_path);
  const auto decision = ps3_decide(a);
  if (const auto* cert = std::get_if<Ps3Certificate>(&decision)) {
    out.stream() << certificate_json(a, *cert).dump() << "\n";
    out.finish();
    return kOk;
  }
  const auto& w = std::get<Ps3Witness>(decision);
  out.stream() << witness_json(a, w).dump() << "\n";
  out.finish();
  std::cerr << "infeasible at index " << w.missing_index << "\n";
  return kFailed;
}

int cmd_reconstruct(const std::string& path, const ReconstructionOptions& opts, const std::string& dot_dir,
                    const std::string& out_path) {
  const auto a = skew_matrix_from_json(read_json(path));
  if (a.is_zero() && a.size() >= 4) {
    std::cerr << "warning: a zero shadow admits at most 3 vertices; no candidates\n";
  }
  if (!dot_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dot_dir, ec);
    if (ec) throw IoError("cannot create " + dot_dir);
  }
  Output out(out_path);
  std::size_t count = 0;
  reconstruct(a, opts, [&](const CandidateQuiver& c) {
    out.stream() << to_json(c).dump() << "\n";
    if (!dot_dir.empty()) {
      const auto file = std::filesystem::path(dot_dir) / ("candidate_" + std::to_string(count) + ".dot");
      std::ofstream dot(file);
      dot << to_dot(c.quiver, c.blocks);
      if (!dot) throw IoError("cannot write " + file.string());
    }
    ++count;
  });
  out.finish();
  report_count(out, "candidates", count);
  return kOk;
}

int cmd_blocks(const std::string& path) {
  const auto q = quiver_from_json(read_json(path));
  bool ok = true;
  for (const auto& [i, j] : two_cycles(q)) {
    if (auto b = block_classify(q, i, j)) {
      std::cout << to_json(*b).dump() << "\n";
    } else {
      std::cout << Json{{"pair", {i, j}}, {"kind", nullptr}}.dump() << "\n";
      ok = false;
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_cartan(const std::string& quiver_path, const std::string& matrix_path) {
  const auto q = quiver_from_json(read_json(quiver_path));
  const auto c = int_matrix_from_json(read_json(matrix_path));
  const auto report = cartan_identity_check(q, c);
  std::cout << to_json(report).dump() << "\n";
  return report.passed() ? kOk : kFailed;
}

int cmd_table(int max_n, const Common& c) {
  check_size(max_n);
  Output out(c.out);
  auto& s = out.stream();
  s << "n,shades,shadows\n";
  for (int n = std::min(3, max_n); n <= max_n; ++n) {
    const auto opts = c.enumeration();
    std::size_t shades = 0, shadows = 0;
    // One enumeration serves both columns.
    enumerate_shades(n, opts, [&](const ShadowRecord& r) {
      ++shades;
      shadows += is_feasible(ps3_decide(r.matrix));
    });
    s << n << "," << shades << "," << shadows << "\n";
  }
  if (max_n <= 2) s << "# n <= 2: the zero matrix is counted; it is the only shade and the only shadow\n";
  s << "# classes are taken up to relabeling" << (c.permutation_only ? "" : " and negation") << "\n";
  out.finish();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, certify and reconstruct tame periodicity shadows"};
  app.require_subcommand(1);

  Common common;
  int size = 0;
  std::string path, second_path, which = "all", dot_dir;
  bool certificates = false;
  ReconstructionOptions ropts;
  bool no_infinite = false, rows_only = false, no_loops = false;

  auto* shades = app.add_subcommand("shades", "List shades of one size as JSON lines");
  shades->add_option("--size,-n", size, "Number of vertices")->required();
  add_common(shades, common);

  auto* shadows = app.add_subcommand("shadows", "List shadows of one size as JSON lines");
  shadows->add_option("--size,-n", size, "Number of vertices")->required();
  shadows->add_flag("--certificates", certificates, "Embed certificate matrices");
  add_common(shadows, common);

  auto* check = app.add_subcommand("check", "Evaluate shadow predicates on a matrix");
  check->add_option("path", path, "Matrix JSON file, - for stdin")->required();
  check->add_option("--which", which, "Predicate to run")->check(CLI::IsMember({"ps1", "ps2", "ps3", "tame", "all"}));

  auto* certify = app.add_subcommand("certify", "Decide the cone condition and print the certificate");
  certify->add_option("path", path, "Matrix JSON file, - for stdin")->required();
  certify->add_option("--out", common.out, "Output file (default stdout)");

  auto* recon = app.add_subcommand("reconstruct", "List candidate quivers for a shadow");
  recon->add_option("path", path, "Matrix JSON file, - for stdin")->required();
  recon->add_option("--dot-dir", dot_dir, "Write one DOT file per candidate here");
  recon->add_option("--out", common.out, "Output file (default stdout)");
  recon->add_flag("--no-infinite-type", no_infinite, "Skip the single-arrow rule");
  recon->add_flag("--rows-only", rows_only, "Apply tameness to rows of the arrow matrix only");
  recon->add_flag("--no-loops", no_loops, "Do not attach loops");
  recon->add_flag("--bare-vertex", ropts.allow_bare_vertex, "Also emit the loop-free single vertex");

  auto* blocks = app.add_subcommand("blocks", "Classify every 2-cycle of a quiver");
  blocks->add_option("path", path, "Quiver JSON file, - for stdin")->required();

  auto* cartan = app.add_subcommand("cartan", "Check that signed adjacency times C is zero");
  cartan->add_option("quiver", path, "Quiver JSON file")->required();
  cartan->add_option("matrix", second_path, "Matrix JSON file holding C")->required();

  auto* table = app.add_subcommand("table", "CSV of shade and shadow counts");
  table->add_option("--max-size", size, "Largest size")->required();
  add_common(table, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  ropts.infinite_type = !no_infinite;
  ropts.arr_checks_on_columns = !rows_only;
  ropts.include_loops = !no_loops;

  try {
    if (*shades) return cmd_shades(size, common);
    if (*shadows) return cmd_shadows(size, certificates, common);
    if (*check) return cmd_check(path, which);
    if (*certify) return cmd_certify(path, common.out);
    if (*recon) return cmd_reconstruct(path, ropts, dot_dir, common.out);
    if (*blocks) return cmd_blocks(path);
    if (*cartan) return cmd_cartan(path, second_path);
    if (*table) return cmd_table(size, common);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
