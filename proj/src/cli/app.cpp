#include "radnorm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radnorm/combinatorics.hpp"
#include "radnorm/oracle.hpp"
#include "radnorm/term_sum.hpp"

namespace radnorm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr Method kMethodOrder[] = {Method::closed, Method::recursive, Method::special,
                                   Method::oracle};
constexpr int kOracleDefaultMaxOrder = 5;
constexpr int kTablePoints = 3;

const char* version() { return RADNORM_VERSION; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), "not an integer: '" + text + "'");
  return value;
}

bool wants(const TableRequest& request, Method m) {
  return std::find(request.methods.begin(), request.methods.end(), m) != request.methods.end();
}

Json rational_or_null(const std::optional<Rational>& v) {
  return v ? Json(v->to_string()) : Json(nullptr);
}

std::string cell_text(const TableCell& cell) {
  if (cell.skipped) return "skipped";
  return cell.value ? cell.value->to_string() : "";
}

std::optional<Rational> first_value(const TableRow& row) {
  for (const auto& cell : row.cells) {
    if (cell.value) return cell.value;
  }
  return std::nullopt;
}

// Left-aligned columns separated by two spaces, no trailing blanks.
std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    // Only point lists contain commas.
    out += fields[i].find(',') == std::string::npos ? fields[i] : "\"" + fields[i] + "\"";
  }
  return out + "\n";
}

Json request_json(const TableRequest& r) {
  Json j;
  j["norm"] = r.norm == TableRequest::Norm::gamma ? "gamma" : "ell";
  j["N"] = {r.dimensions.lo, r.dimensions.hi};
  j["k"] = {r.orders.lo, r.orders.hi};
  if (r.norm == TableRequest::Norm::gamma) {
    Json s = Json::array();
    for (const auto& v : r.s_values) s.push_back(v.to_string());
    j["s"] = s;
  }
  Json methods = Json::array();
  for (Method m : kMethodOrder) {
    if (wants(r, m)) methods.push_back(to_string(m));
  }
  j["methods"] = methods;
  j["seed"] = r.seed;
  return j;
}

std::string render_table(const TableRequest& request, const std::vector<TableRow>& rows) {
  const bool gamma = request.norm == TableRequest::Norm::gamma;
  std::vector<std::string> header{"N", "k"};
  if (gamma) header.emplace_back("s");
  for (Method m : kMethodOrder) {
    if (wants(request, m)) header.push_back(to_string(m));
  }
  if (request.decimal) header.emplace_back("decimal");

  auto fields = [&](const TableRow& row) {
    std::vector<std::string> f{std::to_string(row.dimension), std::to_string(row.order)};
    if (gamma) f.push_back(row.s->to_string());
    for (const auto& cell : row.cells) f.push_back(cell_text(cell));
    if (request.decimal) {
      const auto v = first_value(row);
      f.push_back(v ? v->to_decimal(12) : "");
    }
    return f;
  };

  switch (request.format) {
    case Format::json: {
      Json j;
      j["version"] = version();
      j["request"] = request_json(request);
      Json out_rows = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["N"] = row.dimension;
        r["k"] = row.order;
        if (gamma) r["s"] = row.s->to_string();
        for (const auto& cell : row.cells) r[to_string(cell.method)] = rational_or_null(cell.value);
        if (request.decimal) {
          const auto v = first_value(row);
          r["decimal"] = v ? Json(v->to_decimal(12)) : Json(nullptr);
        }
        r["consistent"] = row.consistent;
        out_rows.push_back(r);
      }
      j["rows"] = out_rows;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = join_csv(header);
      for (const auto& row : rows) out += join_csv(fields(row));
      return out;
    }
    case Format::plain: {
      std::vector<std::vector<std::string>> grid{header};
      for (const auto& row : rows) grid.push_back(fields(row));
      return render_aligned(grid);
    }
  }
  return {};
}

std::string verdict_text(const VerifyReport& report) {
  return report.exact_match ? "exact-match" : "mismatch";
}

std::string render_verify(const VerifyRequest& request, const VerifyReport& report) {
  switch (request.format) {
    case Format::json: {
      Json j;
      j["version"] = version();
      Json req;
      req["N"] = request.dimension;
      req["kind"] = request.kind.is_logarithm() ? "log" : "power";
      if (request.kind.is_power()) req["s"] = request.kind.exponent().to_string();
      req["k"] = request.order;
      Json pts = Json::array();
      for (const auto& pv : report.oracle_values) pts.push_back(pv.point.to_string());
      req["points"] = pts;
      req["seed"] = request.seed;
      req["weighted"] = request.weighted;
      j["request"] = req;
      Json rep;
      Json methods = Json::object();
      for (const auto& mv : report.method_values) methods[to_string(mv.method)] = mv.value.to_string();
      rep["methods"] = methods;
      Json values = Json::array();
      for (const auto& pv : report.oracle_values) {
        values.push_back(Json{{"point", pv.point.to_string()}, {"rescaled", pv.rescaled.to_string()}});
      }
      rep["oracle"] = values;
      rep["constant"] = report.constant;
      rep["verdict"] = verdict_text(report);
      if (!report.detail.empty()) rep["detail"] = report.detail;
      if (request.timing) rep["elapsed_ms"] = report.elapsed_ms;
      j["report"] = rep;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = join_csv({"source", "point", "value"});
      for (const auto& mv : report.method_values) out += join_csv({to_string(mv.method), "", mv.value.to_string()});
      for (const auto& pv : report.oracle_values) {
        out += join_csv({"oracle", pv.point.to_string(), pv.rescaled.to_string()});
      }
      out += join_csv({"verdict", "", verdict_text(report)});
      if (request.timing) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << report.elapsed_ms;
        out += join_csv({"elapsed_ms", "", ms.str()});
      }
      return out;
    }
    case Format::plain: {
      std::ostringstream os;
      os << "query: N=" << request.dimension << " k=" << request.order << " kind="
         << request.kind.to_string() << "\n";
      std::vector<std::vector<std::string>> grid{{"source", "point", "value"}};
      for (const auto& mv : report.method_values) grid.push_back({to_string(mv.method), "-", mv.value.to_string()});
      for (const auto& pv : report.oracle_values) {
        grid.push_back({"oracle", "(" + pv.point.to_string() + ")", pv.rescaled.to_string()});
      }
      os << render_aligned(grid);
      os << "verdict: " << verdict_text(report);
      if (!report.detail.empty()) os << " (" << report.detail << ")";
      os << "\n";
      if (request.timing) os << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed_ms << " ms\n";
      return os.str();
    }
  }
  return {};
}

std::string render_identities(const IdentitiesRequest& request,
                              const std::vector<IdentityResult>& results) {
  switch (request.format) {
    case Format::json: {
      Json j;
      j["version"] = version();
      j["request"] = Json{{"max_m", request.max_m},
                          {"max_N", request.max_dimension},
                          {"max_k", request.max_order},
                          {"trials", request.trials},
                          {"seed", request.seed}};
      Json list = Json::array();
      for (const auto& r : results) {
        list.push_back(Json{{"name", r.name},
                            {"status", r.status},
                            {"cases", r.cases},
                            {"failures", r.failures},
                            {"detail", r.detail}});
      }
      j["report"] = Json{{"identities", list}};
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = join_csv({"name", "status", "cases", "failures", "detail"});
      for (const auto& r : results) {
        out += join_csv({r.name, r.status, std::to_string(r.cases), std::to_string(r.failures),
                         r.detail});
      }
      return out;
    }
    case Format::plain: {
      std::vector<std::vector<std::string>> grid{{"status", "identity", "cases", "detail"}};
      for (const auto& r : results) {
        std::string status = r.status;
        std::transform(status.begin(), status.end(), status.begin(), ::toupper);
        grid.push_back({status, r.name, std::to_string(r.cases), r.detail});
      }
      return render_aligned(grid);
    }
  }
  return {};
}

IdentityResult tally(std::string name, long cases, long failures, std::string detail) {
  return IdentityResult{std::move(name), failures == 0 ? "pass" : "fail", cases, failures,
                        std::move(detail)};
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw std::invalid_argument("unknown format '" + name + "'");
}

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return IntRange{v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  require(r.lo <= r.hi, "empty range '" + text + "'");
  return r;
}

void TableRequest::validate() const {
  require(dimensions.lo >= 1 && dimensions.lo <= dimensions.hi, "N range must be nonempty with N >= 1");
  require(orders.lo >= 0 && orders.lo <= orders.hi, "k range must be nonempty with k >= 0");
  require(!methods.empty(), "at least one method is required");
  if (norm == Norm::ell) {
    require(orders.lo >= 1, "ell tables need k >= 1");
    require(s_values.empty(), "s values only apply to gamma tables");
  } else {
    require(!s_values.empty(), "gamma tables need at least one s value");
  }
  if (dimensions.hi > kMaxTableDimension || orders.hi > kMaxTableOrder) {
    throw CapacityError("table is capped at N <= " + std::to_string(kMaxTableDimension) +
                        " and k <= " + std::to_string(kMaxTableOrder));
  }
  const long rows = static_cast<long>(dimensions.size()) * orders.size() *
                    static_cast<long>(std::max<std::size_t>(s_values.size(), 1));
  if (rows > kMaxTableRows) {
    throw CapacityError("table has " + std::to_string(rows) + " rows; cap is " +
                        std::to_string(kMaxTableRows));
  }
  if (wants(*this, Method::oracle)) {
    const int oracle_max_k = force_oracle ? orders.hi : std::min(orders.hi, kOracleDefaultMaxOrder);
    if (oracle_max_k >= orders.lo) check_oracle_capacity(dimensions.hi, oracle_max_k);
  }
}

std::vector<TableRow> compute_table(const TableRequest& request) {
  request.validate();
  const bool gamma = request.norm == TableRequest::Norm::gamma;
  std::vector<std::optional<Rational>> exponents;
  if (gamma) {
    for (const auto& s : request.s_values) exponents.emplace_back(s);
  } else {
    exponents.emplace_back(std::nullopt);
  }

  std::vector<TableRow> rows;
  for (int n = request.dimensions.lo; n <= request.dimensions.hi; ++n) {
    for (int k = request.orders.lo; k <= request.orders.hi; ++k) {
      for (const auto& s : exponents) {
        TableRow row{n, k, s, {}, true};
        const NormKind kind = s ? NormKind::power(*s) : NormKind::logarithm();
        const ConstantQuery query{n, k, kind};
        for (Method m : kMethodOrder) {
          if (!wants(request, m)) continue;
          TableCell cell{m, std::nullopt, false};
          if (m == Method::oracle) {
            if (k > kOracleDefaultMaxOrder && !request.force_oracle) {
              cell.skipped = true;
            } else {
              const auto report =
                  verify_constancy(n, kind, k, sample_points(n, kTablePoints, request.seed));
              if (report.constant) {
                cell.value = report.oracle_values.front().rescaled;
              } else {
                row.consistent = false;
              }
            }
          } else if (auto v = evaluate(query, m)) {
            cell.value = v->value;
          }
          row.cells.push_back(cell);
        }
        const auto ref = first_value(row);
        for (const auto& cell : row.cells) {
          if (cell.value && *cell.value != *ref) row.consistent = false;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

CommandResult cmd_table(const TableRequest& request) {
  const auto rows = compute_table(request);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.consistent; });
  return CommandResult{ok ? kOk : kMismatch, render_table(request, rows)};
}

CommandResult cmd_verify(const VerifyRequest& request) {
  ConstantQuery{request.dimension, request.order, request.kind}.validate();
  require(request.random_points >= 0, "random point count must be >= 0");
  check_oracle_capacity(request.dimension, request.order);
  auto points = request.points;
  if (points.empty()) {
    points = default_sample_points(request.dimension, request.random_points, request.seed);
  }
  const auto report =
      verify_constancy(request.dimension, request.kind, request.order, points, request.weighted);
  return CommandResult{report.exact_match ? kOk : kMismatch, render_verify(request, report)};
}

std::vector<IdentityResult> run_identities(const IdentitiesRequest& request) {
  require(request.max_m >= 0, "max-m must be >= 0");
  require(request.max_dimension >= 1, "max-N must be >= 1");
  require(request.max_order >= 1, "max-k must be >= 1");
  require(request.trials >= 1, "trials must be >= 1");
  check_oracle_capacity(request.max_dimension, request.max_order);

  std::vector<IdentityResult> results;
  const auto nus = random_rationals(request.trials, request.seed);

  {
    long cases = 0;
    long failures = 0;
    for (const auto& nu : nus) {
      for (int m = 0; m <= request.max_m; ++m) {
        ++cases;
        if (!half_identity_check(nu, m)) ++failures;
      }
    }
    results.push_back(tally("half_integer_pochhammer", cases, failures,
                            "m <= " + std::to_string(request.max_m)));
  }

  // Exponents for the power family, one per (N, k), drawn once.
  const auto exponents = random_rationals(request.max_dimension * request.max_order, request.seed + 1);
  auto exponent_for = [&](int n, int k) {
    return exponents[static_cast<std::size_t>((n - 1) * request.max_order + (k - 1))];
  };

  if (request.max_dimension < 2) {
    results.push_back(IdentityResult{"dimension_split", "skipped", 0, 0, "requires N >= 2"});
  } else {
    long cases = 0;
    long failures = 0;
    for (int n = 2; n <= request.max_dimension; ++n) {
      const auto points = sample_points(n, 5, request.seed);
      for (int k = 1; k <= request.max_order; ++k) {
        for (const auto& kind : {NormKind::power(exponent_for(n, k)), NormKind::logarithm()}) {
          for (const auto& p : points) {
            ++cases;
            if (!dimension_split_check(n, kind, k, p)) ++failures;
          }
        }
      }
    }
    results.push_back(tally("dimension_split", cases, failures, "5 points per case"));
  }

  {
    long cases = 0;
    long failures = 0;
    for (int n = 1; n <= request.max_dimension; ++n) {
      const auto points = default_sample_points(n, 5, request.seed);
      for (int k = 1; k <= request.max_order; ++k) {
        for (const auto& kind : {NormKind::power(exponent_for(n, k)), NormKind::logarithm()}) {
          DerivativeTable table(n, kind);
          for (const auto& p : points) {
            ++cases;
            if (grad_norm_sq(table, k, p, true).coeff != grad_norm_sq(table, k, p, false).coeff) {
              ++failures;
            }
          }
        }
      }
    }
    results.push_back(tally("weighted_enumeration", cases, failures, "multinomial weights"));
  }

  {
    long cases = 0;
    long failures = 0;
    const int laplace_max_n = std::max(request.max_dimension, 2);
    for (int n = 1; n <= laplace_max_n; ++n) {
      for (const auto& nu : nus) {
        ++cases;
        const TermSum expected =
            TermSum::radial_power(n, nu - Rational(2), nu * (nu + Rational(n - 2)));
        if (!(laplacian(TermSum::radial_power(n, nu)) == expected)) ++failures;
      }
    }
    ++cases;
    if (!laplacian(TermSum::radial_power(2, Rational(0))).is_zero() ||
        !divergence(seed(2, NormKind::logarithm()).components).is_zero()) {
      ++failures;
    }
    results.push_back(tally("laplacian_radial_power", cases, failures, "including log r in the plane"));
  }

  if (request.max_dimension < 2) {
    results.push_back(IdentityResult{"laplacian_recursion", "skipped", 0, 0, "requires N >= 2"});
  } else {
    long cases = 0;
    long failures = 0;
    for (int n = 2; n <= request.max_dimension; ++n) {
      for (int k = 1; k <= request.max_order; ++k) {
        ++cases;
        if (!laplacian_recursion_step(n, k).holds) ++failures;
        ++cases;
        if (gamma_special_by_steps(n, k) != gamma_special(n, k)) ++failures;
      }
    }
    for (int k = 2; k <= request.max_order; ++k) {
      ++cases;
      if (!log_laplacian_recursion_step(k).holds) ++failures;
    }
    results.push_back(tally("laplacian_recursion", cases, failures, "s = 2 - N and log r in the plane"));
  }

  {
    const NormKind log = NormKind::logarithm();
    const SamplePoint axis(std::vector<Rational>{Rational(1), Rational(0)});
    const SamplePoint diagonal(std::vector<Rational>{Rational(1), Rational(1)});
    const Rational a = tilde_norm_sq(2, log, 2, axis).times_radial_power(Rational(4));
    const Rational b = tilde_norm_sq(2, log, 2, diagonal).times_radial_power(Rational(4));
    results.push_back(IdentityResult{"tilde_norm_nonconstant", a != b ? "pass" : "fail", 2,
                                     a != b ? 0 : 1,
                                     "(" + a.to_string() + ", " + b.to_string() + ")"});
  }
  return results;
}

CommandResult cmd_identities(const IdentitiesRequest& request) {
  const auto results = run_identities(request);
  const bool ok = std::none_of(results.begin(), results.end(),
                               [](const IdentityResult& r) { return r.status == "fail"; });
  return CommandResult{ok ? kOk : kMismatch, render_identities(request, results)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact scale-invariant derivative norms of |x|^s and log|x|", "radnorm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  std::string format = "plain";
  std::uint64_t seed = 0;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    sub->add_option("--seed", seed, "Seed for random sample points and exponents")
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  TableRequest table;
  std::string norm;
  std::string dims;
  std::string orders;
  std::string s_list;
  std::string methods = "closed";
  auto* table_cmd = app.add_subcommand("table", "Tabulate gamma or ell over an (N, k, s) grid");
  table_cmd->add_option("--norm", norm, "gamma or ell")->required()->check(CLI::IsMember({"gamma", "ell"}));
  table_cmd->add_option("-N,--dims", dims, "Dimension range a..b or a single value")->required();
  table_cmd->add_option("-k,--orders", orders, "Order range a..b or a single value")->required();
  table_cmd->add_option("-s,--exponents", s_list, "Comma-separated rational exponents (gamma only)");
  table_cmd->add_option("--methods", methods, "Comma-separated subset of closed,recursive,special,oracle")
      ->capture_default_str();
  table_cmd->add_flag("--decimal", table.decimal, "Add a 12-significant-digit decimal column");
  table_cmd->add_flag("--force-oracle", table.force_oracle, "Run the oracle even for k >= 6");
  add_common(table_cmd);

  VerifyRequest verify;
  std::string kind_name;
  std::string exponent;
  std::vector<std::string> point_args;
  bool unweighted = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed, recursive and oracle values agree");
  verify_cmd->add_option("-N,--dim", verify.dimension, "Dimension N")->required();
  verify_cmd->add_option("--kind", kind_name, "power or log")->required()->check(CLI::IsMember({"power", "log"}));
  verify_cmd->add_option("-s,--exponent", exponent, "Rational exponent s (power only)");
  verify_cmd->add_option("-k,--order", verify.order, "Derivative order k")->required();
  verify_cmd->add_option("--point", point_args, "Sample point as comma-separated rationals (repeatable)");
  verify_cmd->add_option("--random-points", verify.random_points, "Extra seeded points when no --point is given")
      ->capture_default_str();
  verify_cmd->add_flag("--unweighted", unweighted, "Enumerate all N^k index tuples");
  verify_cmd->add_flag("--timing", verify.timing, "Include elapsed time in the report");
  add_common(verify_cmd);

  IdentitiesRequest identities;
  auto* id_cmd = app.add_subcommand("identities", "Run the combinatorial and symbolic identity suite");
  id_cmd->add_option("--max-m", identities.max_m, "Largest m for the half-integer identity")->capture_default_str();
  id_cmd->add_option("--max-N", identities.max_dimension, "Largest dimension")->capture_default_str();
  id_cmd->add_option("--max-k", identities.max_order, "Largest derivative order")->capture_default_str();
  id_cmd->add_option("--trials", identities.trials, "Random rationals per identity")->capture_default_str();
  add_common(id_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    CommandResult result;
    if (*table_cmd) {
      table.norm = norm == "gamma" ? TableRequest::Norm::gamma : TableRequest::Norm::ell;
      table.dimensions = IntRange::parse(dims);
      table.orders = IntRange::parse(orders);
      if (!s_list.empty()) table.s_values = parse_rational_list(s_list);
      table.methods.clear();
      std::istringstream names(methods);
      for (std::string name; std::getline(names, name, ',');) {
        const Method m = parse_method(name);
        if (!wants(table, m)) table.methods.push_back(m);
      }
      table.format = parse_format(format);
      table.seed = seed;
      result = cmd_table(table);
    } else if (*verify_cmd) {
      if (kind_name == "log") {
        require(exponent.empty(), "--exponent only applies to --kind power");
        verify.kind = NormKind::logarithm();
      } else {
        require(!exponent.empty(), "--kind power needs --exponent");
        verify.kind = NormKind::power(Rational::parse(exponent));
      }
      for (const auto& p : point_args) verify.points.push_back(SamplePoint::parse(p));
      verify.weighted = !unweighted;
      verify.format = parse_format(format);
      verify.seed = seed;
      result = cmd_verify(verify);
    } else {
      identities.format = parse_format(format);
      identities.seed = seed;
      result = cmd_identities(identities);
    }

    if (out_path.empty()) {
      out << result.output;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kUsage;
      }
      file << result.output;
    }
    return result.exit_code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace radnorm::cli
