#include "bhset/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <exception>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string_view>

#include "bhset/errors.hpp"
#include "bhset/greedy.hpp"
#include "bhset/oracle.hpp"
#include "bhset/theorems.hpp"

namespace bhset::cli {

using Json = nlohmann::ordered_json;

namespace {

// Raised for argument values that parse but violate a precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json_array(std::span<const u128> values) {
  Json arr = Json::array();
  for (u128 v : values) arr.push_back(to_string(v));
  return arr;
}

std::string join(std::span<const u128> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

u128 parse_number(const std::string& text, const char* what) {
  const auto value = parse_u128(text);
  if (!value) throw UsageError(std::string(what) + " is not a decimal integer in [0, 2^128): '" + text + "'");
  return *value;
}

Order parse_order(unsigned h) {
  if (h == 0) throw UsageError("--h must be at least 1");
  return Order(h);
}

// Flags shared by the subcommands that accept them.
struct Options {
  unsigned h = 0;
  std::string set;
  std::string n;
  unsigned count = 0;
  unsigned h_min = 0;
  unsigned h_max = 0;
  unsigned k = 0;
  unsigned h_max_a3 = 30;
  unsigned h_max_a4 = 20;
  unsigned depth = 4;
  unsigned repunit_h_max = 5;
  unsigned repunit_k_max = 6;
  bool inject_fault = false;
  bool oracle = false;
  std::string format = "text";
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

int cmd_greedy(const Options& opt, std::ostream& out) {
  const Order h = parse_order(opt.h);
  const IntegerSet prefix = opt.oracle ? oracle::greedy(h, opt.count) : greedy_prefix(h, opt.count);
  if (opt.format == "json") {
    Json doc;
    doc["h"] = opt.h;
    doc["elements"] = to_json_array(prefix.elements());
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "k,a\n";
    for (std::size_t i = 0; i < prefix.size(); ++i) out << i << ',' << to_string(prefix[i]) << '\n';
  } else {
    out << join(prefix.elements(), " ") << '\n';
  }
  return kOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Order h = parse_order(opt.h);
  const IntegerSet set = parse_set(opt.set);
  const BhVerdict verdict = opt.oracle ? oracle::is_bh(set, h) : is_bh(set, h);
  const auto* w = verdict.witness ? &*verdict.witness : nullptr;
  if (opt.format == "json") {
    Json doc;
    doc["h"] = opt.h;
    doc["set"] = to_json_array(set.elements());
    doc["certified"] = verdict.certified;
    if (w) {
      Json wj;
      wj["n"] = to_string(w->n);
      wj["first"] = to_json_array(w->first.parts);
      wj["second"] = to_json_array(w->second.parts);
      doc["witness"] = std::move(wj);
    }
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "h,certified,n,first,second\n" << opt.h << ',' << (verdict.certified ? "true" : "false");
    if (w) {
      out << ',' << to_string(w->n) << ',' << join(w->first.parts, "+") << ','
          << join(w->second.parts, "+");
    } else {
      out << ",,,";
    }
    out << '\n';
  } else if (w) {
    out << to_string(w->n) << " = " << join(w->first.parts, "+") << " = "
        << join(w->second.parts, "+") << '\n';
  } else {
    out << "certified B_" << opt.h << '\n';
  }
  return verdict.certified ? kOk : kPropertyFails;
}

int cmd_repfn(const Options& opt, std::ostream& out) {
  const Order h = parse_order(opt.h);
  const IntegerSet set = parse_set(opt.set);
  const u128 n = parse_number(opt.n, "--n");
  const auto reps = representations(set, h, n);
  if (opt.format == "json") {
    Json doc;
    doc["h"] = opt.h;
    doc["set"] = to_json_array(set.elements());
    doc["n"] = to_string(n);
    doc["count"] = std::to_string(reps.size());
    Json list = Json::array();
    for (const auto& r : reps) list.push_back(to_json_array(r.parts));
    doc["representations"] = std::move(list);
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "n,count,representation\n";
    if (reps.empty()) out << to_string(n) << ",0,\n";
    for (const auto& r : reps) {
      out << to_string(n) << ',' << reps.size() << ',' << join(r.parts, "+") << '\n';
    }
  } else {
    out << reps.size() << '\n';
    for (const auto& r : reps) out << join(r.parts, "+") << '\n';
  }
  return kOk;
}

int cmd_sumset(const Options& opt, std::ostream& out) {
  const Order h = parse_order(opt.h);
  const IntegerSet set = parse_set(opt.set);
  const IntegerSet sums = h_fold_sumset(set, h);
  if (opt.format == "json") {
    Json doc;
    doc["h"] = opt.h;
    doc["set"] = to_json_array(set.elements());
    doc["sumset"] = to_json_array(sums.elements());
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "value\n";
    for (u128 v : sums) out << to_string(v) << '\n';
  } else {
    out << join(sums.elements(), ",") << '\n';
  }
  return kOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  if (opt.h_min == 0 || opt.h_min > opt.h_max) throw UsageError("need 1 <= --h-min <= --h-max");
  if (opt.k == 0) throw UsageError("--k must be at least 1");
  const auto rows = greedy_table(opt.h_min, opt.h_max, opt.k, opt.oracle);
  if (opt.format == "json") {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["h"] = row.h;
      r["a"] = to_json_array(row.a);
      list.push_back(std::move(r));
    }
    Json doc;
    doc["rows"] = std::move(list);
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << 'h';
    for (unsigned j = 1; j <= opt.k; ++j) out << ",a" << j;
    out << '\n';
    for (const auto& row : rows) out << row.h << ',' << join(row.a, ",") << '\n';
  } else {
    for (const auto& row : rows) out << row.h << ": " << join(row.a, " ") << '\n';
  }
  return kOk;
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.depth == 0) throw UsageError("--depth must be at least 1");
  VerifyConfig config;
  config.h_max_a3 = opt.h_max_a3;
  config.h_max_a4 = opt.h_max_a4;
  config.prefix_depth = opt.depth;
  config.repunit_h_max = opt.repunit_h_max;
  config.repunit_k_max = opt.repunit_k_max;
  config.inject_fault = opt.inject_fault;
  const VerificationReport report = verify_suite(config);
  if (opt.format == "json") {
    Json claims = Json::array();
    for (const auto& c : report.claims) {
      Json cj;
      cj["id"] = c.id;
      cj["range"] = c.range;
      cj["pass"] = c.pass;
      cj["details"] = c.details;
      claims.push_back(std::move(cj));
    }
    Json doc;
    doc["claims"] = std::move(claims);
    doc["pass"] = report.pass();
    out << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "id,range,pass,details\n";
    for (const auto& c : report.claims) {
      out << c.id << ',' << csv_safe(c.range) << ',' << (c.pass ? "true" : "false") << ','
          << csv_safe(c.details) << '\n';
    }
  } else {
    for (const auto& c : report.claims) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.range << "] " << c.details << '\n';
    }
    out << (report.pass() ? "all claims passed" : "some claims FAILED") << '\n';
  }
  return report.pass() ? kOk : kPropertyFails;
}

}  // namespace

IntegerSet parse_set(const std::string& text) {
  std::vector<u128> elements;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto value = parse_u128(token);
    if (!value) throw InvalidArgument("set element is not a decimal integer in [0, 2^128): '" + token + "'");
    if (!elements.empty() && elements.back() >= *value) {
      throw InvalidArgument("set elements must be strictly increasing: " + token + " follows " +
                            to_string(elements.back()));
    }
    elements.push_back(*value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntegerSet(std::move(elements));
}

std::vector<TableRow> greedy_table(unsigned h_min, unsigned h_max, unsigned k, bool use_oracle) {
  const std::size_t n = h_max - h_min + 1;
  std::vector<TableRow> rows(n);
  std::vector<std::exception_ptr> errors(n);
  GreedyLimits limits;
  limits.scan = ScanPolicy::serial;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      const unsigned h = h_min + static_cast<unsigned>(i);
      const IntegerSet prefix = use_oracle ? oracle::greedy(Order(h), k) : greedy_prefix(Order(h), k, limits);
      rows[idx].h = h;
      rows[idx].a.assign(prefix.begin() + 1, prefix.end());
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy B_h-sets: construction, certification, sumsets and verification", "bhset"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  Options opt;

  auto* greedy = app.add_subcommand("greedy", "Print a_0(h)..a_count(h) of the greedy B_h-set");
  greedy->add_option("--h", opt.h, "Order h >= 1")->required();
  greedy->add_option("--count", opt.count, "Number of positive elements")->required();
  greedy->add_flag("--oracle", opt.oracle, "Use the brute-force reference");
  add_format(greedy, opt);

  auto* check = app.add_subcommand("check", "Certify a set as B_h or print a collision");
  check->add_option("--h", opt.h, "Order h >= 1")->required();
  check->add_option("--set", opt.set, "Strictly increasing comma-separated integers")->required();
  check->add_flag("--oracle", opt.oracle, "Use the brute-force reference");
  add_format(check, opt);

  auto* repfn = app.add_subcommand("repfn", "Count and list the h-fold representations of n");
  repfn->add_option("--h", opt.h, "Order h >= 1")->required();
  repfn->add_option("--set", opt.set, "Strictly increasing comma-separated integers")->required();
  repfn->add_option("--n", opt.n, "Integer to represent")->required();
  add_format(repfn, opt);

  auto* sumset = app.add_subcommand("sumset", "Print the h-fold sumset hA");
  sumset->add_option("--h", opt.h, "Order h >= 1")->required();
  sumset->add_option("--set", opt.set, "Strictly increasing comma-separated integers")->required();
  add_format(sumset, opt);

  auto* table = app.add_subcommand("table", "Tabulate a_1(h)..a_k(h) over a range of h");
  table->add_option("--h-min", opt.h_min, "Smallest h")->required();
  table->add_option("--h-max", opt.h_max, "Largest h")->required();
  table->add_option("--k", opt.k, "Number of positive elements per row")->required();
  table->add_flag("--oracle", opt.oracle, "Use the brute-force reference");
  add_format(table, opt);

  auto* verify = app.add_subcommand("verify", "Check the closed forms and bounds against the engine");
  verify->add_option("--h-max-a3", opt.h_max_a3, "Largest h for the a_3 check")->capture_default_str();
  verify->add_option("--h-max-a4", opt.h_max_a4, "Largest h for the a_4 check")->capture_default_str();
  verify->add_option("--depth", opt.depth, "Greedy prefix depth")->capture_default_str();
  verify->add_option("--repunit-h-max", opt.repunit_h_max, "Largest h for repunit sets")
      ->capture_default_str();
  verify->add_option("--repunit-k-max", opt.repunit_k_max, "Largest k for repunit sets")
      ->capture_default_str();
  verify->add_flag("--inject-fault", opt.inject_fault, "Corrupt one expectation (self-test)");
  add_format(verify, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const CLI::App* active = app.get_subcommands().front();
  try {
    if (active == greedy) return cmd_greedy(opt, out);
    if (active == check) return cmd_check(opt, out);
    if (active == repfn) return cmd_repfn(opt, out);
    if (active == sumset) return cmd_sumset(opt, out);
    if (active == table) return cmd_table(opt, out);
    return cmd_verify(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kResource;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kResource;
  }
}

}  // namespace bhset::cli
