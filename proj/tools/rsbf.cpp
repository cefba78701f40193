// rsbf: command-line front end over the C interface in rsbf/rsbf.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rsbf/rsbf.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kStdoutSpectrumLimit = 16;

using ordered_json = nlohmann::ordered_json;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiFailure : std::runtime_error {
  ApiFailure(rsbf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  rsbf_status status;
};

void api(rsbf_status s) {
  if (s != RSBF_OK) throw ApiFailure(s, rsbf_last_error());
}

struct TableDeleter {
  void operator()(rsbf_truth_table* t) const { rsbf_tt_free(t); }
};
struct SpectrumDeleter {
  void operator()(rsbf_spectrum* s) const { rsbf_spectrum_free(s); }
};
using Table = std::unique_ptr<rsbf_truth_table, TableDeleter>;
using Spectrum = std::unique_ptr<rsbf_spectrum, SpectrumDeleter>;

struct Options {
  unsigned max_n = 24;
  unsigned workers = 0;
  std::string format;
  std::string out;
  bool force = false;
  bool bits = false;

  unsigned n = 0;
  unsigned l = 4;
  unsigned e = 1;
  unsigned i = 0;
  unsigned j = 0;
  std::optional<std::uint64_t> at;
  std::string n_range;
  std::string e_range;
  std::string which;
  int table_id = 1;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageFailure("cannot open " + path + " for writing");
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string bit_string(std::uint64_t c, unsigned n) {
  std::string s(n, '0');
  for (unsigned k = 0; k < n; ++k) {
    if ((c >> k) & 1u) s[k] = '1';
  }
  return s;
}

// A mask printed as an integer, or as c_0 c_1 ... c_{n-1} with --bits.
ordered_json mask_json(std::uint64_t c, unsigned n, bool bits) {
  if (bits) return bit_string(c, n);
  return c;
}

std::string mask_text(std::uint64_t c, unsigned n, bool bits) {
  return bits ? bit_string(c, n) : std::to_string(c);
}

std::pair<unsigned, unsigned> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const unsigned long v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {static_cast<unsigned>(v), static_cast<unsigned>(v)};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const unsigned long lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const unsigned long hi = std::stoul(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo == 0 || hi < lo) throw std::invalid_argument(text);
    return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
  } catch (const std::logic_error&) {
    throw UsageFailure(std::string(flag) + " expects A..B with 1 <= A <= B, got '" + text + "'");
  }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageFailure("format '" + format + "' not supported here");
}

void require_arity(const Options& o) {
  if (o.max_n < 1 || o.max_n > rsbf_hard_max_arity()) {
    throw UsageFailure("--max-n must be in 1.." + std::to_string(rsbf_hard_max_arity()));
  }
  if (o.n > o.max_n) {
    throw UsageFailure("n=" + std::to_string(o.n) + " exceeds --max-n " + std::to_string(o.max_n));
  }
}

std::string family_label(const Options& o, bool sub) {
  if (sub) {
    return "f_{" + std::to_string(o.i) + "," + std::to_string(o.j) + "}^" + std::to_string(o.n);
  }
  return "F_{" + std::to_string(o.l) + "," + std::to_string(o.e) + "}^" + std::to_string(o.n);
}

Table build(const Options& o, bool sub) {
  require_arity(o);
  rsbf_truth_table* raw = nullptr;
  api(sub ? rsbf_tt_subfunction(o.i, o.j, o.n, &raw) : rsbf_tt_monomial_rsbf(o.n, o.l, o.e, &raw));
  return Table(raw);
}

Spectrum transform(const Table& t) {
  rsbf_spectrum* raw = nullptr;
  api(rsbf_walsh_transform(t.get(), &raw));
  return Spectrum(raw);
}

int cmd_analyze(const Options& o) {
  require_format(o.format, {"text", "json"});
  const Table t = build(o, false);
  const Spectrum s = transform(t);
  std::uint64_t weight = 0;
  std::uint64_t nl = 0;
  rsbf_peak peak{};
  int max_at_zero = 0;
  api(rsbf_tt_weight(t.get(), &weight));
  api(rsbf_spectrum_nonlinearity(s.get(), &nl));
  api(rsbf_spectrum_peak(s.get(), &peak));
  api(rsbf_spectrum_max_at_zero(s.get(), &max_at_zero));
  const std::int64_t w0 = rsbf_spectrum_values(s.get())[0];
  const bool degenerate = o.n < o.l;

  Sink sink(o.out);
  auto& os = sink.os();
  if (o.format == "json") {
    ordered_json j;
    j["n"] = o.n;
    j["l"] = o.l;
    j["e"] = o.e;
    j["weight"] = weight;
    j["w0"] = w0;
    j["max"] = peak.max;
    j["argmax"] = mask_json(peak.argmax, o.n, o.bits);
    j["abs_max"] = peak.abs_max;
    j["abs_argmax"] = mask_json(peak.abs_argmax, o.n, o.bits);
    j["nonlinearity"] = nl;
    j["nonlinearity_equals_weight"] = nl == weight;
    j["max_abs_at_zero"] = max_at_zero == 1;
    if (degenerate) j["note"] = "degenerate (n < l)";
    os << j.dump() << '\n';
  } else {
    os << family_label(o, false) << (degenerate ? "  [degenerate (n < l)]" : "") << '\n'
       << "weight        " << weight << '\n'
       << "W0            " << w0 << '\n'
       << "max W         " << peak.max << " at c=" << mask_text(peak.argmax, o.n, o.bits) << '\n'
       << "max |W|       " << peak.abs_max << " at c=" << mask_text(peak.abs_argmax, o.n, o.bits)
       << '\n'
       << "nonlinearity  " << nl << '\n'
       << "N = wt        " << (nl == weight ? "true" : "false") << '\n';
  }
  return kExitPass;
}

int emit_spectrum(const Options& o, bool sub) {
  require_format(o.format, {"text", "json", "csv"});
  const Table t = build(o, sub);
  const bool degenerate = !sub && o.n < o.l;

  if (o.at) {
    std::int64_t v = 0;
    api(rsbf_tt_walsh_at(t.get(), *o.at, &v));
    Sink sink(o.out);
    auto& os = sink.os();
    if (o.format == "json") {
      ordered_json j;
      j["function"] = family_label(o, sub);
      j["c"] = mask_json(*o.at, o.n, o.bits);
      j["value"] = v;
      if (degenerate) j["note"] = "degenerate (n < l)";
      os << j.dump() << '\n';
    } else if (o.format == "csv") {
      os << "c,value\r\n" << mask_text(*o.at, o.n, o.bits) << ',' << v << "\r\n";
    } else {
      if (degenerate) std::cerr << "note: degenerate (n < l)\n";
      os << v << '\n';
    }
    return kExitPass;
  }

  if (o.n > kStdoutSpectrumLimit && o.out.empty() && !o.force) {
    throw UsageFailure("refusing to print 2^" + std::to_string(o.n) +
                       " values to stdout; use --out PATH or --force");
  }
  const Spectrum s = transform(t);
  const std::int64_t* values = rsbf_spectrum_values(s.get());
  const std::uint64_t size = std::uint64_t{1} << o.n;
  Sink sink(o.out);
  auto& os = sink.os();
  if (o.format == "json") {
    ordered_json j;
    j["function"] = family_label(o, sub);
    j["n"] = o.n;
    if (degenerate) j["note"] = "degenerate (n < l)";
    j["spectrum"] = std::vector<std::int64_t>(values, values + size);
    os << j.dump() << '\n';
  } else if (o.format == "csv") {
    os << "c,value\r\n";
    for (std::uint64_t c = 0; c < size; ++c) os << mask_text(c, o.n, o.bits) << ',' << values[c] << "\r\n";
  } else {
    if (degenerate) std::cerr << "note: degenerate (n < l)\n";
    for (std::uint64_t c = 0; c < size; ++c) os << mask_text(c, o.n, o.bits) << ' ' << values[c] << '\n';
  }
  return kExitPass;
}

std::string report_text(const std::string& line) {
  const auto j = nlohmann::ordered_json::parse(line);
  std::ostringstream out;
  std::string status = j["status"].get<std::string>();
  for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  out << status << ' ' << j["check"].get<std::string>();
  for (const auto& [key, value] : j["params"].items()) {
    out << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  if (j["expectation"] != "expected") out << " (" << j["expectation"].get<std::string>() << ')';
  for (const auto& w : j["witnesses"]) {
    out << "\n  " << w["at"].get<std::string>() << ": expected " << w["expected"].dump() << ", got "
        << w["actual"].dump();
  }
  if (j.contains("note")) out << "\n  " << j["note"].get<std::string>();
  return out.str();
}

struct CheckContext {
  std::ostream* os;
  bool text;
};

void on_report(const char* line, void* user) {
  auto* ctx = static_cast<CheckContext*>(user);
  *ctx->os << (ctx->text ? report_text(line) : std::string(line)) << '\n';
  ctx->os->flush();
}

int cmd_check(const Options& o) {
  require_format(o.format, {"json", "text"});
  rsbf_check_options opts;
  rsbf_check_options_init(&opts);
  opts.max_n = o.max_n;
  opts.workers = o.workers;
  opts.l = o.l;
  if (!o.n_range.empty()) std::tie(opts.n_lo, opts.n_hi) = parse_range(o.n_range, "--n-range");
  if (!o.e_range.empty()) std::tie(opts.e_lo, opts.e_hi) = parse_range(o.e_range, "--e-range");
  Sink sink(o.out);
  CheckContext ctx{&sink.os(), o.format == "text"};
  int passed = 0;
  api(rsbf_check(o.which.c_str(), &opts, on_report, &ctx, &passed));
  return passed ? kExitPass : kExitFail;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

int cmd_table(const Options& o) {
  require_format(o.format, {"csv", "json", "text"});
  std::vector<std::string> lines;
  int passed = 0;
  api(rsbf_table_csv(
      o.table_id,
      [](const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); },
      &lines, &passed));
  Sink sink(o.out);
  auto& os = sink.os();
  if (o.format == "csv") {
    for (const auto& line : lines) os << line << "\r\n";
  } else {
    std::vector<std::vector<std::string>> grid;
    for (const auto& line : lines) grid.push_back(split_csv(line));
    if (o.format == "json") {
      ordered_json j;
      j["table"] = o.table_id;
      j["corner"] = grid[0][0];
      j["columns"] = std::vector<std::string>(grid[0].begin() + 1, grid[0].end());
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 1; r < grid.size(); ++r) {
        ordered_json row;
        row["key"] = grid[r][0];
        std::vector<std::int64_t> cells;
        for (std::size_t c = 1; c < grid[r].size(); ++c) cells.push_back(std::stoll(grid[r][c]));
        row["values"] = cells;
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      os << j.dump() << '\n';
    } else {
      std::vector<std::size_t> width(grid[0].size(), 0);
      for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << (c ? "  " : "") << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
      }
    }
  }
  if (!passed) std::cerr << "table " << o.table_id << ": reproduced values differ from the reference table\n";
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walsh spectra and nonlinearity of monomial rotation symmetric Boolean functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--max-n", o.max_n, "largest arity allowed (hard max 28)")->envname("RSBF_MAX_N");
  app.add_option("--workers", o.workers, "worker threads for scans (0: one per core)")
      ->envname("RSBF_WORKERS");
  app.add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("RSBF_FORMAT");
  app.add_option("--out", o.out, "write output to PATH")->envname("RSBF_OUT");
  app.add_flag("--force", o.force, "allow full spectra above n=16 on stdout")->envname("RSBF_FORCE");
  app.add_flag("--bits", o.bits, "print masks as bit vectors c_0..c_{n-1}")->envname("RSBF_BITS");

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of variables")->required()->envname("RSBF_N");
    sub->add_option("--l", o.l, "monomial degree")->envname("RSBF_L");
    sub->add_option("--e", o.e, "index stride")->envname("RSBF_E");
  };

  auto* analyze = app.add_subcommand("analyze", "weight, spectrum extremes and nonlinearity of F_{l,e}^n");
  add_family(analyze);

  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of F_{l,e}^n");
  add_family(spectrum);
  spectrum->add_option("--at", o.at, "single mask c")->envname("RSBF_AT");

  auto* subfn = app.add_subcommand("subfn", "Walsh spectrum of the sub-function f_{i,j}^n");
  subfn->add_option("--i", o.i, "suffix selector 0..3")->required()->envname("RSBF_I");
  subfn->add_option("--j", o.j, "prefix selector 0..3")->required()->envname("RSBF_J");
  subfn->add_option("--n", o.n, "number of variables")->required()->envname("RSBF_N");
  subfn->add_option("--at", o.at, "single mask c")->envname("RSBF_AT");

  auto* check = app.add_subcommand("check", "run a verification suite, one JSON report per line");
  check->add_option("which", o.which,
                    "table1 table2 lemma21 lemma22 eq23 eq26 thm24 bound theorem conjecture factor all")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "lemma21", "lemma22", "eq23", "eq26", "thm24", "bound",
                             "theorem", "conjecture", "factor", "all"}));
  check->add_option("--n-range", o.n_range, "arities A..B")->envname("RSBF_N_RANGE");
  check->add_option("--e-range", o.e_range, "strides A..B")->envname("RSBF_E_RANGE");
  auto* check_l = check->add_option("--l", o.l, "degree for theorem/conjecture scans")->envname("RSBF_L");

  auto* table = app.add_subcommand("table", "reproduce reference table 1 or 2");
  table->add_option("id", o.table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      if (o.format.empty()) o.format = "text";
      return cmd_analyze(o);
    }
    if (*spectrum || *subfn) {
      if (o.format.empty()) o.format = "text";
      return emit_spectrum(o, subfn->parsed());
    }
    if (*check) {
      if (o.format.empty()) o.format = "json";
      if (o.max_n < 1 || o.max_n > rsbf_hard_max_arity()) {
        throw UsageFailure("--max-n must be in 1.." + std::to_string(rsbf_hard_max_arity()));
      }
      if (check_l->count() == 0) o.l = 0;
      return cmd_check(o);
    }
    if (o.format.empty()) o.format = "csv";
    return cmd_table(o);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == RSBF_ERR_USAGE || e.status == RSBF_ERR_CONFIG ||
                   e.status == RSBF_ERR_PRECONDITION
               ? kExitUsage
               : kExitFail;
  }
}
