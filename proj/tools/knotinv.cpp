// knotinv: invariants of knot and link diagrams given as PD codes.
//
//   knotinv invariants FILE [--json]
//   knotinv obstruct (--poly TEXT | --csv FILE) [--json]
//   knotinv decompose FILE [--json]
//
// FILE holds one PD code per line, optionally prefixed by "name:"; "-" reads
// standard input.  Exit status: 0 all records fine, 1 some record failed,
// 2 bad usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "knotinv/report.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr const char* kLimitVariable = "KNOTINV_MAX_CROSSINGS";

struct Options {
  std::string file;
  std::string poly;
  std::string csv;
  bool json = false;
  int max_crossings = -1;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int crossing_limit(const Options& opt) {
  if (opt.max_crossings >= 0) return opt.max_crossings;
  if (const char* env = std::getenv(kLimitVariable); env && *env) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kLimitVariable) + " must be a non-negative integer, got \"" + env + "\"");
  }
  return knotinv::BracketOptions{}.max_crossings;
}

knotinv::BracketOptions bracket_options(const Options& opt) {
  knotinv::BracketOptions b;
  b.max_crossings = crossing_limit(opt);
  // Records already run in parallel when jobs > 1.
  if (opt.jobs > 1) b.threads = 1;
  return b;
}

template <class Read>
auto read_records(const std::string& path, Read&& read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read(in);
}

int run_invariants(const Options& opt, bool decompose) {
  const auto records = read_records(opt.file, [](std::istream& in) { return knotinv::read_pd_records(in); });
  knotinv::ReportOptions ro;
  ro.bracket = bracket_options(opt);
  const auto reports = knotinv::parallel_map<knotinv::KnotRecord, knotinv::Report>(
      records, opt.jobs, [&](const knotinv::KnotRecord& r) { return knotinv::compute_report(r, ro); });
  int errors = 0;
  for (const auto& r : reports) errors += knotinv::has_error(r) ? 1 : 0;
  if (opt.json) {
    knotinv::Json out{{"command", decompose ? "decompose" : "invariants"}};
    knotinv::Json list = knotinv::Json::array();
    for (const auto& r : reports) {
      if (!decompose) {
        list.push_back(knotinv::to_json(r));
        continue;
      }
      knotinv::Json j{{"name", r.name}, {"line", r.line}, {"status", knotinv::status_name(r.status)}};
      if (r.status == knotinv::Status::error)
        j["error"] = r.error;
      else
        j["decomposition"] = knotinv::field_json(r.decomposition);
      list.push_back(std::move(j));
    }
    out["records"] = std::move(list);
    out["summary"] = {{"records", reports.size()}, {"errors", errors}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << (decompose ? knotinv::decomposition_text(r) : knotinv::to_text(r));
    std::cout << reports.size() << " records, " << errors << " with errors\n";
  }
  return errors > 0 ? 1 : 0;
}

int run_obstruct(const Options& opt) {
  std::vector<knotinv::KnotRecord> records;
  if (!opt.poly.empty()) {
    knotinv::KnotRecord r;
    r.name = "polynomial";
    r.jones_text = opt.poly;
    records.push_back(std::move(r));
  } else {
    records = read_records(opt.csv, [](std::istream& in) { return knotinv::read_csv_records(in); });
  }
  const knotinv::BracketOptions b = bracket_options(opt);
  const auto results = knotinv::parallel_map<knotinv::KnotRecord, knotinv::ObstructionResult>(
      records, opt.jobs, [&](const knotinv::KnotRecord& r) { return knotinv::obstruct_record(r, b); });
  int fired = 0, quiet = 0, errors = 0;
  for (const auto& r : results) {
    if (!r.verdict.ok())
      ++errors;
    else if (r.verdict.value->fires)
      ++fired;
    else
      ++quiet;
  }
  if (opt.json) {
    knotinv::Json list = knotinv::Json::array();
    for (const auto& r : results) list.push_back(knotinv::to_json(r));
    knotinv::Json out{{"command", "obstruct"},
                      {"records", std::move(list)},
                      {"summary", {{"records", results.size()}, {"fired", fired}, {"not_fired", quiet}, {"errors", errors}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << knotinv::to_text(r);
    std::cout << "fired: " << fired << ", not fired: " << quiet << ", errors: " << errors << "\n";
  }
  return errors > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of knot and link diagrams given as PD codes"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Print JSON instead of text");
    sub->add_option("--max-crossings", opt.max_crossings,
                    std::string("Largest diagram handed to the state sum (default 24, or $") + kLimitVariable + ")")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-j,--jobs", opt.jobs, "Records processed in parallel")->check(CLI::PositiveNumber);
  };

  CLI::App* inv = app.add_subcommand("invariants", "Report invariants of every PD code in a file");
  inv->add_option("file", opt.file, "PD file, one diagram per line ('-' for stdin)")->required();
  common(inv);

  CLI::App* obs = app.add_subcommand("obstruct", "Jones-coefficient test for Turaev genus and dealternating number two");
  CLI::Option_group* source = obs->add_option_group("source", "Polynomial source");
  source->add_option("--poly", opt.poly, "Jones polynomial, e.g. \"2t^2 - 3t^3 + 5t^4\"");
  source->add_option("--csv", opt.csv, "CSV with columns name,jones and optionally pd");
  source->require_option(1);
  common(obs);

  CLI::App* dec = app.add_subcommand("decompose", "Alternating decomposition and genus-one ring structure");
  dec->add_option("file", opt.file, "PD file, one diagram per line ('-' for stdin)")->required();
  common(dec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (inv->parsed()) return run_invariants(opt, false);
    if (dec->parsed()) return run_invariants(opt, true);
    return run_obstruct(opt);
  } catch (const UsageError& e) {
    std::cerr << "knotinv: " << e.what() << "\n";
    return kUsageError;
  } catch (const knotinv::Error& e) {
    std::cerr << "knotinv: " << e.what() << "\n";
    return 1;
  }
}
