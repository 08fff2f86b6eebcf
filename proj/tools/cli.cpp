#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecat/alcoved.hpp"
#include "ecat/errors.hpp"
#include "ecat/geometry.hpp"
#include "ecat/numbers.hpp"
#include "ecat/orbit.hpp"
#include "ecat/serialize.hpp"

namespace ecat::cli {

namespace {

constexpr int kDefaultFactorialCap = 11;
constexpr int kDefaultAmbientCap = 10;

struct Settings {
  std::string format = "plain";
  int threads = 1;
  int max_factorial = kDefaultFactorialCap;
  int max_ambient = kDefaultAmbientCap;
  bool allow_large = false;

  EnumerationOptions enumeration() const { return {threads, max_factorial}; }
  GeometryOptions geometry() const { return {threads, max_ambient}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += cell_text(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_plain_table(std::ostream& out, const Table& t, const std::string& indent = "") {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s = indent;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_text(v));
    line(cells);
  }
}

void print_table(std::ostream& out, const Table& t, const Settings& s) {
  if (s.format == "json") {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    out << Json{{"columns", t.columns}, {"rows", rows}}.dump(2) << '\n';
  } else if (s.format == "csv") {
    std::string header;
    for (std::size_t c = 0; c < t.columns.size(); ++c) header += (c ? "," : "") + csv_field(t.columns[c]);
    out << header << '\n';
    for (const auto& row : t.rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) line += (c ? "," : "") + csv_field(cell_text(row[c]));
      out << line << '\n';
    }
  } else {
    print_plain_table(out, t);
  }
}

bool is_object_array(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

Table object_array_table(const Json& v) {
  Table t;
  for (const auto& [key, _] : v.front().items()) t.columns.push_back(key);
  for (const auto& e : v) {
    std::vector<Json> row;
    for (const auto& c : t.columns) row.push_back(e.value(c, Json()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void print_record(std::ostream& out, const Json& record, const Settings& s) {
  if (s.format == "json") {
    out << record.dump(2) << '\n';
    return;
  }
  if (s.format == "csv") {
    out << "field,value\n";
    for (const auto& [key, value] : record.items()) {
      out << csv_field(key) << ',' << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return;
  }
  if (record.contains("passed")) {
    out << (record["passed"].get<bool>() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& [key, value] : record.items()) {
    if (key == "passed" || (key == "witness" && value.get<std::string>().empty())) continue;
    if (is_object_array(value)) {
      out << key << ":\n";
      print_plain_table(out, object_array_table(value), "  ");
    } else {
      out << key << ": " << cell_text(value) << '\n';
    }
  }
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad subset entry: " + token);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument("repeated subset entry");
  return out;
}

struct PolytopeArgs {
  std::string family;
  std::string spec_path;
  int k = 2;
  int n = 1;
  int i = 0;
  std::string flipped;
};

void add_polytope_options(CLI::App* cmd, PolytopeArgs& p) {
  auto* family = cmd->add_option("--family", p.family, "hypersimplex | pkn | pkni | flipped")
                     ->check(CLI::IsMember({"hypersimplex", "pkn", "pkni", "flipped"}));
  auto* spec = cmd->add_option("--spec", p.spec_path, "AlcovedSpec JSON file ('-' for stdin)");
  family->excludes(spec);
  cmd->add_option("--k", p.k, "level / Fuss parameter");
  cmd->add_option("--n", p.n, "size parameter");
  cmd->add_option("--i", p.i, "piece index for pkni");
  cmd->add_option("--T", p.flipped, "flipped inequalities for 'flipped', e.g. 1,3");
}

AlcovedSpec build_spec(const PolytopeArgs& p) {
  if (!p.spec_path.empty()) {
    Json j;
    if (p.spec_path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(p.spec_path);
      if (!in) throw std::invalid_argument("cannot open " + p.spec_path);
      j = Json::parse(in);
    }
    return alcoved_spec_from_json(j);
  }
  if (p.family == "hypersimplex") return spec_for_hypersimplex(p.k, p.n);
  if (p.family == "pkn") return spec_for_Pkn(p.k, p.n);
  if (p.family == "pkni") return spec_for_Pkni(p.k, p.n, p.i).spec;
  if (p.family == "flipped") return spec_for_P2n_flipped(p.n, parse_subset(p.flipped));
  throw std::invalid_argument("one of --family or --spec is required");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Eulerian-Catalan enumeration and verification"};
  app.name("ecat");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "plain | csv | json")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--threads", s.threads, "enumeration worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-factorial-cap", s.max_factorial, "largest permutation size enumerated exhaustively")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ambient", s.max_ambient, "largest ambient dimension for Ehrhart counting")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", s.allow_large, "permit caps above their defaults");

  int n = -1;
  int k = 2;
  int max_n = -1;

  auto* row_cmd = app.add_subcommand("eulerian-row", "A(m, n) for m = 0..n-1");
  row_cmd->add_option("--n", n, "permutation size")->required();

  auto* ec_cmd = app.add_subcommand("ec", "Eulerian-Catalan numbers EC_0..EC_max");
  ec_cmd->add_option("--max-n", max_n, "largest index")->required();

  auto* fuss_cmd = app.add_subcommand("fuss", "A(n, kn+k-1) / (n+1)");
  fuss_cmd->add_option("--k", k, "Fuss parameter, at least 2");
  auto* fuss_n = fuss_cmd->add_option("--n", n, "single index");
  auto* fuss_max = fuss_cmd->add_option("--max-n", max_n, "emit indices 0..max");
  fuss_n->excludes(fuss_max);

  auto* catalan_cmd = app.add_subcommand("catalan", "Catalan numbers C_0..C_max");
  catalan_cmd->add_option("--max-n", max_n, "largest index")->required();

  auto* dyck_cmd = app.add_subcommand("dyck-count", "count (k-1)-Dyck permutations of S_{kn+k-1} exhaustively");
  dyck_cmd->add_option("--n", n, "descent count")->required();
  dyck_cmd->add_option("--k", k, "Fuss parameter, at least 2");

  std::string census_by = "exceedance";
  auto* census_cmd = app.add_subcommand("census", "census of S_{2n+1} with n descents");
  census_cmd->add_option("--n", n, "half size")->required();
  census_cmd->add_option("--by", census_by, "exceedance | positions")
      ->check(CLI::IsMember({"exceedance", "positions"}));

  std::vector<int> orbit_word;
  auto* orbit_cmd = app.add_subcommand("orbit", "cyclic orbit certificate of a permutation");
  orbit_cmd->add_option("permutation", orbit_word, "one-line notation, space separated")->required();

  std::string target;
  auto* verify_cmd = app.add_subcommand("verify", "check an identity exhaustively");
  verify_cmd->add_option("target", target, "equidistribution | subdivision | alcoved-vs-dyck | census-vs-volumes")
      ->required()
      ->check(CLI::IsMember({"equidistribution", "subdivision", "alcoved-vs-dyck", "census-vs-volumes"}));
  verify_cmd->add_option("--n", n, "size parameter")->required();
  verify_cmd->add_option("--k", k, "Fuss parameter");

  PolytopeArgs poly;
  auto* volume_cmd = app.add_subcommand("volume", "Ehrhart record and normalized volume of an alcoved polytope");
  add_polytope_options(volume_cmd, poly);
  auto* spec_cmd = app.add_subcommand("spec", "print an AlcovedSpec");
  add_polytope_options(spec_cmd, poly);
  auto* wcount_cmd = app.add_subcommand("alcoved-count", "alcoved permutation count |W| of a polytope");
  add_polytope_options(wcount_cmd, poly);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  if (!s.allow_large && (s.max_factorial > kDefaultFactorialCap || s.max_ambient > kDefaultAmbientCap)) {
    err << "error: raising --max-factorial-cap above " << kDefaultFactorialCap << " or --max-ambient above "
        << kDefaultAmbientCap << " requires --allow-large\n";
    return kBadArguments;
  }

  try {
    if (row_cmd->parsed()) {
      if (n < 1) throw std::invalid_argument("--n must be at least 1");
      Table t{{"m", "A(m,n)"}, {}};
      for (int m = 0; m < n; ++m) t.rows.push_back({m, to_decimal(eulerian(m, n))});
      print_table(out, t, s);
    } else if (ec_cmd->parsed()) {
      if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
      Table t{{"n", "EC_n"}, {}};
      for (int i = 0; i <= max_n; ++i) t.rows.push_back({i, to_decimal(eulerian_catalan(i))});
      print_table(out, t, s);
    } else if (fuss_cmd->parsed()) {
      if (n < 0 && max_n < 0) throw std::invalid_argument("fuss needs --n or --max-n");
      const int lo = n >= 0 ? n : 0;
      const int hi = n >= 0 ? n : max_n;
      Table t{{"k", "n", "value"}, {}};
      for (int i = lo; i <= hi; ++i) t.rows.push_back({k, i, to_decimal(fuss_eulerian_catalan(k, i))});
      print_table(out, t, s);
    } else if (catalan_cmd->parsed()) {
      if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
      Table t{{"n", "C_n"}, {}};
      for (int i = 0; i <= max_n; ++i) t.rows.push_back({i, to_decimal(catalan(i))});
      print_table(out, t, s);
    } else if (dyck_cmd->parsed()) {
      const ExactCount count = count_dyck_permutations(n, k, s.enumeration());
      Table t{{"k", "n", "count", "fuss"}, {{k, n, to_decimal(count), to_decimal(fuss_eulerian_catalan(k, n))}}};
      print_table(out, t, s);
    } else if (census_cmd->parsed()) {
      if (census_by == "exceedance") {
        Table t{{"j", "count"}, {}};
        const auto census = equidistribution_census(n, s.enumeration());
        for (std::size_t j = 0; j < census.size(); ++j) t.rows.push_back({j, to_decimal(census[j])});
        print_table(out, t, s);
      } else {
        Table t{{"T", "count"}, {}};
        const auto census = exceedance_position_census(n, s.enumeration());
        for (const auto& subset : subsets_of(n)) {
          t.rows.push_back({subset_key(subset), to_decimal(census.at(subset))});
        }
        print_table(out, t, s);
      }
    } else if (orbit_cmd->parsed()) {
      print_record(out, to_json(analyze_orbit(Permutation(orbit_word))), s);
    } else if (verify_cmd->parsed()) {
      Json report;
      if (target == "equidistribution") {
        report = to_json(verify_equidistribution(n, s.enumeration()));
      } else if (target == "subdivision") {
        report = to_json(verify_subdivision(k, n, s.geometry()));
      } else if (target == "alcoved-vs-dyck") {
        report = to_json(verify_alcoved_vs_dyck(k, n, s.enumeration()));
      } else {
        report = to_json(verify_census_vs_volumes(n, s.enumeration(), s.geometry()));
      }
      print_record(out, report, s);
      return report["passed"].get<bool>() ? kOk : kVerificationFailed;
    } else if (volume_cmd->parsed()) {
      print_record(out, to_json(ehrhart_volume(build_spec(poly), s.geometry())), s);
    } else if (spec_cmd->parsed()) {
      const AlcovedSpec spec = build_spec(poly);
      if (s.format == "json") {
        out << to_json(spec).dump(2) << '\n';
      } else {
        Table t{{"i", "j", "b", "c"}, {}};
        for (const auto& b : to_json(spec)["bounds"]) t.rows.push_back({b["i"], b["j"], b["b"], b["c"]});
        out << "ambient_n: " << spec.ambient_n() << "\nlevel_k: " << spec.level_k() << '\n';
        print_table(out, t, s);
      }
    } else if (wcount_cmd->parsed()) {
      const AlcovedSpec spec = build_spec(poly);
      Table t{{"ambient_n", "level_k", "w_set_count"},
              {{spec.ambient_n(), spec.level_k(), to_decimal(w_set_count(spec, s.enumeration()))}}};
      print_table(out, t, s);
    }
  } catch (const ScaleCapExceeded& e) {
    err << "error: " << e.what() << " (raise the cap with --allow-large)\n";
    return kScaleCapRefused;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const DegeneratePolytope& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kOk;
}

}  // namespace ecat::cli
