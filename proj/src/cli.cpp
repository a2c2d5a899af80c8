#include "degseq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/counting.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/filters.hpp"
#include "degseq/precise.hpp"
#include "degseq/sequence.hpp"

namespace degseq::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out << ',';
      out << csv_field(fields[k]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void write_json(std::ostream& out, const std::string& command, Json payload) {
  Json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["payload"] = std::move(payload);
  out << record.dump(2) << '\n';
}

std::vector<Degree> parse_list(const std::string& text) {
  std::vector<Degree> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty element in sequence");
    const std::string token = item.substr(first, last - first + 1);
    Degree v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("not an integer: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InputError("empty sequence");
  return values;
}

DegreeSequence read_sequence(const std::string& text, bool sort) {
  auto values = parse_list(text);
  if (sort) std::sort(values.begin(), values.end(), std::greater<>());
  try {
    return DegreeSequence::make(values);
  } catch (const SequenceError& e) {
    throw InputError(std::string(to_string(e.kind())) + ": " + e.what());
  }
}

Json sequence_json(const DegreeSequence& seq) {
  Json arr = Json::array();
  for (Degree d : seq.values()) arr.push_back(d);
  return arr;
}

std::string sequence_text(const DegreeSequence& seq) {
  std::string s;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(seq[k]);
  }
  return s;
}

Json big_array(const std::vector<BigCount>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

std::string join(const std::vector<BigCount>& values, char sep) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += sep;
    s += values[k].str();
  }
  return s;
}

void check_budget(std::size_t n, bool override_budget, std::ostream& err) {
  if (n <= kDefaultBudget) return;
  if (!override_budget) {
    throw BudgetExceeded("BudgetExceeded: n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                         std::to_string(kDefaultBudget) + " (use --budget-override)");
  }
  err << "warning: enumerating n = " << n << " beyond the default budget; this may take very long\n";
}

unsigned env_threads() {
  if (const char* env = std::getenv("DEGSEQ_THREADS")) {
    unsigned v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return default_threads();
}

struct Options {
  std::string format = "json";
  std::string sequence;
  std::string algorithm = "egl";
  bool sort = false;
  std::size_t max_n = 0;
  std::size_t n = 0;
  std::string columns = "R,E";
  std::string metric;
  unsigned threads = 0;
  bool budget_override = false;
  std::string checkpoint;
};

Format format_of(const Options& o) { return o.format == "csv" ? Format::Csv : Format::Json; }

int cmd_test(const Options& o, std::ostream& out) {
  const DegreeSequence seq = read_sequence(o.sequence, o.sort);
  Json payload;
  payload["sequence"] = sequence_json(seq);
  std::string algorithm_name;
  bool graphical = false;
  std::uint64_t rounds = 0;
  std::optional<std::string> rejected_by;
  std::optional<std::size_t> witness;

  std::string lowered = o.algorithm;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "composite") {
    algorithm_name = "composite";
    const FilterVerdict verdict = composite_test(seq);
    if (!verdict.passed()) {
      rejected_by = std::string(to_string(*verdict.rejected_by));
      witness = verdict.witness_index;
    } else {
      const DecisionReport r = eg_linear(seq);
      graphical = r.graphical;
      witness = r.witness_index;
    }
  } else {
    Algorithm algorithm{};
    try {
      algorithm = parse_algorithm(o.algorithm);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const DecisionReport r = is_graphical(seq, algorithm);
    algorithm_name = std::string(to_string(algorithm));
    graphical = r.graphical;
    rounds = r.rounds;
    witness = r.witness_index;
  }

  if (format_of(o) == Format::Csv) {
    Table t{{"sequence", "algorithm", "graphical", "rounds", "rejected_by", "witness_index"}, {}};
    t.rows.push_back({sequence_text(seq), algorithm_name, graphical ? "true" : "false",
                      std::to_string(rounds), rejected_by.value_or(""),
                      witness ? std::to_string(*witness) : ""});
    write_csv(out, t);
  } else {
    payload["algorithm"] = algorithm_name;
    payload["graphical"] = graphical;
    payload["rounds"] = rounds;
    payload["rejected_by"] = rejected_by ? Json(*rejected_by) : Json(nullptr);
    payload["witness_index"] = witness ? Json(*witness) : Json(nullptr);
    write_json(out, "test", std::move(payload));
  }
  return graphical ? kExitGraphical : kExitNotGraphical;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const DegreeSequence seq = read_sequence(o.sequence, o.sort);
  const auto graph = realize(seq);
  std::vector<std::string> edges;
  if (graph) {
    for (auto [u, v] : graph->edges) edges.push_back(std::to_string(u) + "-" + std::to_string(v));
  }
  if (format_of(o) == Format::Csv) {
    Table t{{"edge"}, {}};
    for (const auto& e : edges) t.rows.push_back({e});
    write_csv(out, t);
  } else {
    Json payload;
    payload["sequence"] = sequence_json(seq);
    payload["graphical"] = graph.has_value();
    payload["edges"] = graph ? Json(edges) : Json(nullptr);
    write_json(out, "realize", std::move(payload));
  }
  return graph ? kExitGraphical : kExitNotGraphical;
}

const std::vector<std::string> kColumnOrder = {"R", "E", "Ez", "Bz", "Fz", "Gz", "G", "ratios"};

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_n < 1) throw InputError("--max-n must be at least 1");
  std::vector<std::string> wanted;
  {
    std::stringstream ss(o.columns);
    for (std::string c; std::getline(ss, c, ',');) {
      if (std::find(kColumnOrder.begin(), kColumnOrder.end(), c) == kColumnOrder.end()) {
        throw InputError("unknown column: " + c);
      }
      wanted.push_back(c);
    }
  }
  std::vector<std::string> columns;
  for (const auto& c : kColumnOrder) {
    if (std::find(wanted.begin(), wanted.end(), c) != wanted.end()) columns.push_back(c);
  }
  const bool enumerative = std::any_of(columns.begin(), columns.end(), [](const std::string& c) {
    return c == "Ez" || c == "Bz" || c == "Fz" || c == "Gz" || c == "G";
  });
  std::vector<CensusRow> census;
  if (enumerative) {
    check_budget(o.max_n, o.budget_override, err);
    census = census_table(o.max_n, o.threads);
  }

  Table t;
  t.header.push_back("n");
  for (const auto& c : columns) t.header.push_back(c == "ratios" ? "E/R" : c);
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : columns) {
      if (c == "R") row.push_back(count_regular_n(n).str());
      else if (c == "E") row.push_back(count_even(n).str());
      else if (c == "Ez") row.push_back(census[n - 1].zerofree_even.str());
      else if (c == "Bz") row.push_back(census[n - 1].binomial.str());
      else if (c == "Fz") row.push_back(census[n - 1].filtered.str());
      else if (c == "Gz") row.push_back(census[n - 1].zerofree_graphical.str());
      else if (c == "G") row.push_back(census[n - 1].graphical.str());
      else row.push_back(to_decimal(ExactRational(count_even(n), count_regular_n(n)), 13));
    }
    t.rows.push_back(std::move(row));
  }

  if (format_of(o) == Format::Csv) {
    write_csv(out, t);
  } else {
    Json payload;
    payload["columns"] = t.header;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json obj;
      obj["n"] = std::stoul(r[0]);
      for (std::size_t k = 1; k < r.size(); ++k) obj[t.header[k]] = r[k];
      rows.push_back(std::move(obj));
    }
    payload["rows"] = std::move(rows);
    write_json(out, "table", std::move(payload));
  }
  return 0;
}

int cmd_histogram(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.metric != "egj-rounds" && o.metric != "b1") throw InputError("unknown metric: " + o.metric);
  if (o.n < 1) throw InputError("--n must be at least 1");
  check_budget(o.n, o.budget_override, err);
  std::vector<BigCount> values;
  if (o.metric == "b1") {
    values = b1_distribution(o.n, o.threads).per_b1;
  } else {
    if (o.n < 3) throw InputError("egj-rounds needs n >= 3");
    values = egj_round_histogram(o.n, o.threads).rounds_histogram;
    while (!values.empty() && values.back() == 0) values.pop_back();
  }
  if (format_of(o) == Format::Csv) {
    Table t{{o.metric == "b1" ? "b1" : "rounds", "count"}, {}};
    for (std::size_t k = 0; k < values.size(); ++k) {
      t.rows.push_back({std::to_string(o.metric == "b1" ? k : k + 1), values[k].str()});
    }
    write_csv(out, t);
  } else {
    Json payload;
    payload["n"] = o.n;
    payload["metric"] = o.metric;
    payload["values"] = big_array(values);
    write_json(out, "histogram", std::move(payload));
  }
  return 0;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw InputError("--n must be at least 1");
  check_budget(o.n, o.budget_override, err);
  Algorithm algorithm{};
  try {
    algorithm = parse_algorithm(o.algorithm);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<CheckpointOptions> checkpoint;
  if (!o.checkpoint.empty()) checkpoint = CheckpointOptions{o.checkpoint};
  const CountReport r = count_graphical(o.n, algorithm, o.threads, checkpoint);
  if (format_of(o) == Format::Csv) {
    Table t{{"n", "algorithm", "total_seen", "zerofree_graphical", "graphical", "per_b1"}, {}};
    t.rows.push_back({std::to_string(o.n), std::string(to_string(algorithm)), r.total_seen.str(),
                      r.accepted.str(), r.derived_total->str(), join(r.per_b1, ';')});
    write_csv(out, t);
  } else {
    Json payload;
    payload["n"] = o.n;
    payload["algorithm"] = std::string(to_string(algorithm));
    payload["total_seen"] = r.total_seen.str();
    payload["zerofree_graphical"] = r.accepted.str();
    payload["graphical"] = r.derived_total->str();
    payload["per_b1"] = big_array(r.per_b1);
    write_json(out, "count", std::move(payload));
  }
  return 0;
}

int cmd_filter_census(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw InputError("--n must be at least 1");
  check_budget(o.n, o.budget_override, err);
  const CensusRow row = census_table(o.n, o.threads).back();
  const std::vector<std::pair<std::string, BigCount>> fields = {
      {"zerofree_even", row.zerofree_even},         {"zerofree_binomial", row.zerofree_binomial},
      {"zerofree_filtered", row.zerofree_filtered}, {"zerofree_graphical", row.zerofree_graphical},
      {"binomial", row.binomial},                   {"filtered", row.filtered},
      {"graphical", row.graphical},
  };
  if (format_of(o) == Format::Csv) {
    Table t{{"n"}, {{std::to_string(o.n)}}};
    for (const auto& [name, value] : fields) {
      t.header.push_back(name);
      t.rows[0].push_back(value.str());
    }
    write_csv(out, t);
  } else {
    Json payload;
    payload["n"] = o.n;
    for (const auto& [name, value] : fields) payload[name] = value.str();
    write_json(out, "filter-census", std::move(payload));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphical degree sequence testing, realization and enumeration", "degseq"};
  app.require_subcommand(1);
  Options o;
  o.threads = env_threads();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_enum_flags = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (default: DEGSEQ_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--budget-override", o.budget_override, "Allow n beyond the enumeration budget");
  };

  auto* test = app.add_subcommand("test", "Decide whether a sequence is graphical");
  test->add_option("--sequence", o.sequence, "Comma-separated degrees, non-increasing")->required();
  test->add_option("--algorithm", o.algorithm,
                   "HHSo, HHSh, HHP, EG, EGSh, EGJ, EGL or composite (filters, then EGL)");
  test->add_flag("--sort", o.sort, "Sort the input descending before validation");
  add_format(test);

  auto* real = app.add_subcommand("realize", "Build a simple graph with the given degrees");
  real->add_option("--sequence", o.sequence, "Comma-separated degrees, non-increasing")->required();
  real->add_flag("--sort", o.sort, "Sort the input descending before validation");
  add_format(real);

  auto* table = app.add_subcommand("table", "Counting table for n = 1..max-n");
  table->add_option("--max-n", o.max_n, "Largest n")->required();
  table->add_option("--columns", o.columns, "Subset of R,E,Ez,Bz,Fz,Gz,G,ratios");
  add_enum_flags(table);
  add_format(table);

  auto* hist = app.add_subcommand("histogram", "EGJ round histogram or b_1 distribution");
  hist->add_option("--n", o.n, "Sequence length")->required();
  hist->add_option("--metric", o.metric, "egj-rounds or b1")->required();
  add_enum_flags(hist);
  add_format(hist);

  auto* count = app.add_subcommand("count", "Count graphical sequences by enumeration");
  count->add_option("--n", o.n, "Sequence length")->required();
  count->add_option("--algorithm", o.algorithm, "Precise tester (default EGL)");
  count->add_option("--checkpoint", o.checkpoint, "Append-only slice log used to resume runs");
  add_enum_flags(count);
  add_format(count);

  auto* census = app.add_subcommand("filter-census", "Filter acceptance counts over zerofree even sequences");
  census->add_option("--n", o.n, "Sequence length")->required();
  add_enum_flags(census);
  add_format(census);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (test->parsed()) return cmd_test(o, out);
    if (real->parsed()) return cmd_realize(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
    if (hist->parsed()) return cmd_histogram(o, out, err);
    if (count->parsed()) return cmd_count(o, out, err);
    if (census->parsed()) return cmd_filter_census(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace degseq::cli
