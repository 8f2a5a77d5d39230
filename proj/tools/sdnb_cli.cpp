#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sdnb/construct.hpp"
#include "sdnb/ortho_group.hpp"
#include "sdnb/search.hpp"
#include "sdnb/serialize.hpp"

namespace {

using namespace sdnb;

constexpr int kExitOk = 0;
constexpr int kExitNonexistence = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInvalidInput = 4;
constexpr int kExitInternal = 5;

void parse_shard(const std::string& s, u64& index, u64& count) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw domain_error("--shard expects i/k");
  try {
    index = std::stoull(s.substr(0, slash));
    count = std::stoull(s.substr(slash + 1));
  } catch (const std::exception&) {
    throw domain_error("--shard expects i/k with nonnegative integers");
  }
  if (count == 0 || index >= count) throw domain_error("--shard requires 0 <= i < k");
}

void check_q(u64 q) {
  u64 p;
  unsigned r;
  try {
    prime_power_decompose(q, p, r);
  } catch (const std::invalid_argument& e) {
    throw domain_error(e.what());
  }
}

// Mirrors the output into $SDNB_OUTPUT_DIR/<name> when the variable is set.
void emit(const std::string& text, const std::string& name) {
  std::cout << text << "\n";
  const char* dir = std::getenv("SDNB_OUTPUT_DIR");
  if (!dir || !*dir) return;
  std::ofstream out(std::string(dir) + "/" + name);
  if (!out) throw domain_error("cannot write to SDNB_OUTPUT_DIR");
  out << text << "\n";
}

std::string report_as(const SearchReport& rep, const std::string& format) {
  if (format == "json") return report_to_json(rep);
  if (format == "csv") return report_csv_header() + "\n" + report_to_csv_row(rep);
  std::ostringstream os;
  os << "q=" << rep.q << " n=" << rep.n << " min_complexity=" << rep.min_complexity
     << " count=" << rep.min_count << " multiplier=" << rep.multiplier
     << (rep.multiplier_integral ? "" : " (NOT an integer multiple!)")
     << " group_cardinality=" << rep.group_cardinality.to_string()
     << " visited=" << rep.visited << (rep.complete ? "" : " [partial]");
  return os.str();
}

SearchReport run_search(u64 q, u64 n, const SearchOptions& base_opt, unsigned jobs) {
  SdnbCertificate cert = construct(q, n);
  if (jobs <= 1 || base_opt.shard_count > 1) return search_min(cert, base_opt);
  std::vector<SearchReport> parts(jobs);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(jobs);
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      try {
        SearchOptions opt = base_opt;
        opt.shard_index = j;
        opt.shard_count = jobs;
        parts[j] = search_min(cert, opt);
      } catch (...) {
        errs[j] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  SearchReport rep = parts[0];
  for (unsigned j = 1; j < jobs; ++j) rep = merge_reports(rep, parts[j]);
  return rep;
}

int run(int argc, char** argv) {
  CLI::App app{"Self-dual normal bases of F_{q^n}/F_q: construction, orthogonal circulant "
               "group enumeration, and minimum-complexity search"};
  app.require_subcommand(1);

  u64 q = 0, n = 0;
  std::string shard, format = "text", range, in_path = "-";
  bool histogram = false, no_histogram = false;
  size_t witness_cap = 16;
  double time_limit = 0;
  unsigned jobs = 1;

  auto add_qn = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "field size (prime power)")->required();
    cmd->add_option("--n", n, "extension degree")->required();
  };

  CLI::App* c_construct = app.add_subcommand("construct", "build a verified generator");
  add_qn(c_construct);
  c_construct->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* c_search = app.add_subcommand("search", "minimum complexity over the full orbit");
  add_qn(c_search);
  c_search->add_option("--shard", shard, "index range i/k of the enumeration");
  c_search->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  c_search->add_flag("--histogram", histogram, "record the full complexity histogram");
  c_search->add_flag("--no-histogram", no_histogram, "disable the histogram (default on for n <= 15)");
  c_search->add_option("--witness-cap", witness_cap, "max witnesses kept (default 16)");
  c_search->add_option("--time-limit", time_limit, "seconds before emitting a partial report");
  c_search->add_option("--jobs", jobs, "worker threads (default 1)");

  CLI::App* c_count = app.add_subcommand("count", "cardinality of the solution group");
  add_qn(c_count);
  c_count->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* c_verify = app.add_subcommand("verify", "check a serialized certificate");
  c_verify->add_option("--in", in_path, "certificate JSON file ('-' for stdin)");

  CLI::App* c_inspect = app.add_subcommand("inspect", "cyclotomic classes and group structure");
  add_qn(c_inspect);

  CLI::App* c_table = app.add_subcommand("table", "CSV rows over a degree range");
  c_table->add_option("--q", q, "field size (prime power)")->required();
  c_table->add_option("--n", range, "degree range a..b (odd degrees)")->required();
  c_table->add_option("--jobs", jobs, "worker threads (default 1)");

  CLI11_PARSE(app, argc, argv);

  if (*c_construct) {
    check_q(q);
    SdnbCertificate cert = construct(q, n);
    cert.complexity = complexity(cert.gamma, *cert.ctx_n);
    std::string name = "construct_q" + std::to_string(q) + "_n" + std::to_string(n) + ".json";
    if (format == "text") {
      emit("q=" + std::to_string(q) + " n=" + std::to_string(n) +
               " complexity=" + std::to_string(*cert.complexity) + " verified=true",
           name);
    } else {
      emit(certificate_to_json(cert), name);
    }
    return kExitOk;
  }

  if (*c_search) {
    check_q(q);
    SearchOptions opt;
    if (!shard.empty()) parse_shard(shard, opt.shard_index, opt.shard_count);
    opt.histogram = histogram || (n <= 15 && !no_histogram);
    opt.witness_cap = witness_cap;
    opt.time_limit_seconds = time_limit;
    SearchReport rep = run_search(q, n, opt, jobs);
    std::string ext = format == "csv" ? ".csv" : ".json";
    std::string name = "search_q" + std::to_string(q) + "_n" + std::to_string(n) + ext;
    emit(report_as(rep, format), name);
    return kExitOk;
  }

  if (*c_count) {
    check_q(q);
    BigUint card = predicted_cardinality(q, n);
    std::string name = "count_q" + std::to_string(q) + "_n" + std::to_string(n) + ".json";
    if (format == "json")
      emit("{\"q\": " + std::to_string(q) + ", \"n\": " + std::to_string(n) +
               ", \"cardinality\": \"" + card.to_string() + "\"}",
           name);
    else
      emit(card.to_string(), name);
    return kExitOk;
  }

  if (*c_verify) {
    std::string text;
    if (in_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(in_path);
      if (!in) throw domain_error("cannot open " + in_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    SdnbCertificate cert = certificate_from_json(text);  // verifies
    std::cout << "valid self-dual normal basis generator: q=" << cert.q << " n=" << cert.n
              << " complexity=" << complexity(cert.gamma, *cert.ctx_n) << "\n";
    return kExitOk;
  }

  if (*c_inspect) {
    check_q(q);
    GroupSpec spec = group_spec(Field::make_fq(q), n);
    std::string kind = spec.kind == GroupCase::Semisimple     ? "semisimple"
                       : spec.kind == GroupCase::RamifiedOdd ? "ramified_odd"
                                                              : "ramified_even_n2";
    std::cout << "{\n  \"case\": \"" << kind << "\",\n  \"cardinality\": \""
              << spec.cardinality.to_string() << "\"";
    if (spec.kind == GroupCase::Semisimple) {
      std::cout << ",\n  \"decomposition\": " << decomposition_to_json(spec.fc->decomposition());
    }
    std::cout << "\n}\n";
    return kExitOk;
  }

  if (*c_table) {
    check_q(q);
    auto dots = range.find("..");
    if (dots == std::string::npos) throw domain_error("--n expects a range a..b");
    u64 a, b;
    try {
      a = std::stoull(range.substr(0, dots));
      b = std::stoull(range.substr(dots + 2));
    } catch (const std::exception&) {
      throw domain_error("--n expects a range a..b of integers");
    }
    if (a > b) throw domain_error("--n range is empty");
    std::ostringstream os;
    os << report_csv_header();
    for (u64 deg = a; deg <= b; ++deg) {
      if (!existence_check(q, deg)) continue;
      u64 p;
      unsigned r;
      prime_power_decompose(q, p, r);
      u64 n1 = deg;
      while (n1 % p == 0) n1 /= p;
      u64 pe = deg / n1;
      if (n1 > 1 && pe > 1) continue;  // enumeration unsupported for mixed degrees
      SearchOptions opt;
      opt.histogram = false;
      SearchReport rep = run_search(q, deg, opt, jobs);
      os << "\n" << report_to_csv_row(rep);
    }
    emit(os.str(), "table_q" + std::to_string(q) + ".csv");
    return kExitOk;
  }

  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sdnb::nonexistence_error& e) {
    std::cerr << "error: no SDNB exists: " << e.what() << "\n";
    return kExitNonexistence;
  } catch (const sdnb::unsupported_error& e) {
    std::cerr << "error: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const sdnb::domain_error& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const sdnb::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
