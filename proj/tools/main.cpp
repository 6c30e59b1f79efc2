// Command-line front end: counting, listing, irreducible enumeration,
// verification against the reference enumerators, and per-Frobenius-number
// benchmarking.
//
// Exit status: 0 on success, 1 when verification finds a mismatch, 2 on
// argument errors.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semforest/semforest.hpp"

namespace {

using semforest::KunzVector;

enum class Format { gens, gaps, kunz, json_lines };

const std::map<std::string, Format> kFormatNames{{"gens", Format::gens},
                                                 {"gaps", Format::gaps},
                                                 {"kunz", Format::kunz},
                                                 {"json-lines", Format::json_lines}};

int default_threads() {
  if (const char* env = std::getenv("SEMFOREST_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 1024) {
      return static_cast<int>(n);
    }
  }
  return 1;
}

struct Request {
  std::int64_t genus = -1;
  std::int64_t frobenius = -1;
  int threads = 1;
  Format format = Format::gens;
  bool sorted = false;
  std::string output;
};

// One record per semigroup. kind is non-null only for irreducible listings.
std::string render(const KunzVector& x, std::int64_t frobenius, std::int64_t genus, Format format,
                   const char* kind) {
  std::string base;
  switch (format) {
    case Format::kunz:
      base = x.to_string();
      break;
    case Format::gens:
      base = semforest::to_csv(semforest::semigroup_from_kunz(x).minimal_generators());
      break;
    case Format::gaps:
      base = semforest::to_csv(semforest::semigroup_from_kunz(x).gaps());
      break;
    case Format::json_lines: {
      const auto s = semforest::semigroup_from_kunz(x);
      nlohmann::ordered_json j;
      j["genus"] = genus;
      j["frobenius"] = frobenius;
      j["multiplicity"] = s.multiplicity();
      j["gens"] = s.minimal_generators();
      j["gaps"] = s.gaps();
      j["kunz"] = x.to_string();
      j["elementary-root"] = semforest::theta_kunz(x, frobenius).to_string();
      if (kind != nullptr) {
        j["kind"] = kind;
      }
      return j.dump();
    }
  }
  if (kind != nullptr) {
    base += '\t';
    base += kind;
  }
  return base;
}

/// Line writer shared by the enumeration visitors. Unsorted mode streams each
/// line under a lock; sorted mode buffers and orders by the canonical
/// coordinate text, which makes the output independent of the thread count.
class RecordSink {
 public:
  RecordSink(std::ostream& out, bool sorted) : out_(out), sorted_(sorted) {}

  void emit(std::string key, std::string line) {
    const std::lock_guard<std::mutex> lock(mutex_);
    if (sorted_) {
      rows_.emplace_back(std::move(key), std::move(line));
    } else {
      out_ << line << '\n';
    }
  }

  void flush() {
    if (!sorted_) {
      return;
    }
    std::sort(rows_.begin(), rows_.end());
    for (const auto& [key, line] : rows_) {
      out_ << line << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool sorted_;
  std::mutex mutex_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("cannot open output file " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

template <typename Visitor>
std::uint64_t run_selection(const Request& req, Visitor&& visit) {
  if (req.genus >= 0 && req.frobenius >= 0) {
    return semforest::enumerate_fg(req.frobenius, req.genus, visit, req.threads);
  }
  if (req.genus >= 0) {
    return semforest::enumerate_genus(req.genus, visit, req.threads);
  }
  if (req.frobenius >= 0) {
    return semforest::enumerate_frobenius(req.frobenius, visit, req.threads);
  }
  throw std::invalid_argument("specify --genus, --frobenius, or both");
}

int run_count(const Request& req) {
  OutputFile out(req.output);
  const auto count =
      run_selection(req, [](const KunzVector&, std::int64_t, std::int64_t) {});
  out.stream() << count << '\n';
  return 0;
}

int run_list(const Request& req) {
  OutputFile out(req.output);
  RecordSink sink(out.stream(), req.sorted);
  run_selection(req, [&](const KunzVector& x, std::int64_t f, std::int64_t g) {
    sink.emit(x.to_string(), render(x, f, g, req.format, nullptr));
  });
  sink.flush();
  return 0;
}

int run_irreducible(const Request& req) {
  OutputFile out(req.output);
  RecordSink sink(out.stream(), req.sorted);
  const std::int64_t genus = semforest::irreducible_genus(req.frobenius);
  semforest::enumerate_irreducible(
      req.frobenius, [&](const KunzVector& x, semforest::IrreducibleKind kind) {
        sink.emit(x.to_string(), render(x, req.frobenius, genus, req.format, to_string(kind)));
      });
  sink.flush();
  return 0;
}

int run_verify(const Request& req, bool key_values) {
  OutputFile out(req.output);
  const auto report = (req.frobenius >= 0) ? semforest::verify_fg(req.frobenius, req.genus)
                                           : semforest::verify_genus(req.genus);
  if (key_values) {
    out.stream() << report.key_values();
  } else {
    out.stream() << report.human() << '\n';
  }
  return report.pass() ? 0 : 1;
}

int run_bench(const Request& req) {
  OutputFile out(req.output);
  auto& stream = out.stream();
  const auto noop = [](const KunzVector&, std::int64_t, std::int64_t) {};
  stream << "frobenius,count,ms\n";
  std::uint64_t total = 0;
  double total_ms = 0.0;
  for (std::int64_t f = req.genus; f <= 2 * req.genus - 1; ++f) {
    const auto start = std::chrono::steady_clock::now();
    const auto count = semforest::enumerate_fg(f, req.genus, noop, req.threads);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    stream << f << ',' << count << ',' << ms << '\n';
    total += count;
    total_ms += ms;
  }
  stream << "total," << total << ',' << total_ms << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups with given genus and Frobenius number"};
  app.require_subcommand(1);

  Request req;
  req.threads = default_threads();
  bool key_values = false;

  const auto add_selection = [&](CLI::App* cmd, bool genus_required) {
    auto* genus = cmd->add_option("-g,--genus", req.genus, "genus (number of gaps)");
    if (genus_required) {
      genus->required();
    }
    cmd->add_option("-f,--frobenius", req.frobenius, "Frobenius number (largest gap)");
    cmd->add_option("-t,--threads", req.threads,
                    "worker threads (default from SEMFOREST_THREADS, else 1)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_record_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", req.format, "record format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    cmd->add_flag("--sorted", req.sorted,
                  "buffer and sort records by Kunz text (deterministic output)");
    cmd->add_option("-o,--output", req.output, "write to a file instead of stdout");
  };

  auto* count = app.add_subcommand("count", "Count semigroups without storing them");
  add_selection(count, false);
  count->add_option("-o,--output", req.output, "write to a file instead of stdout");

  auto* list = app.add_subcommand("list", "List semigroups, one record per line");
  add_selection(list, false);
  add_record_options(list);

  auto* irreducible =
      app.add_subcommand("irreducible", "List the irreducible semigroups with a Frobenius number");
  irreducible->add_option("-f,--frobenius", req.frobenius, "Frobenius number")->required();
  add_record_options(irreducible);

  auto* verify = app.add_subcommand("verify", "Check the engine against the reference enumerators");
  add_selection(verify, true);
  verify->add_flag("--kv", key_values, "machine-readable key=value report");
  verify->add_option("-o,--output", req.output, "write to a file instead of stdout");

  auto* bench = app.add_subcommand("bench", "Counts and timings per Frobenius number (CSV)");
  add_selection(bench, true);
  bench->add_option("-o,--output", req.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) {
      return run_count(req);
    }
    if (list->parsed()) {
      return run_list(req);
    }
    if (irreducible->parsed()) {
      return run_irreducible(req);
    }
    if (verify->parsed()) {
      return run_verify(req, key_values);
    }
    if (bench->parsed()) {
      return run_bench(req);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
