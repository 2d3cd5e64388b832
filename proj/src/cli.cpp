#include "killing/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "killing/combinatorics.hpp"
#include "killing/kernel_analysis.hpp"
#include "killing/table_io.hpp"
#include "killing/verify.hpp"

namespace killing::cli {

namespace {

constexpr std::size_t kMaxN = 8;
constexpr std::size_t kMaxP = 5;
constexpr std::size_t kMaxQ = 12;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  bool force = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out_path, "Write output to PATH instead of standard output");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--force", c.force, "Allow sizes above the default guard");
}

std::size_t parse_number(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw std::invalid_argument("not a non-negative integer: '" + s + "'");
  }
  return std::stoul(s);
}

std::vector<std::size_t> range_or_throw(const std::string& name, const std::string& text) {
  try {
    return parse_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<unsigned> as_unsigned(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

void guard(bool force, const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ps,
           std::optional<std::size_t> q_max) {
  if (force) return;
  auto too_big = [](const std::vector<std::size_t>& v, std::size_t limit) {
    return !v.empty() && *std::max_element(v.begin(), v.end()) > limit;
  };
  if (too_big(ns, kMaxN) || too_big(ps, kMaxP) || (q_max && *q_max > kMaxQ)) {
    throw UsageError("request exceeds the size guard (n <= 8, p <= 5, q_max <= 12); pass --force to override");
  }
}

nlohmann::json range_json(const std::vector<std::size_t>& v) { return v; }

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + c.out_path);
  file << payload;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

int cmd_table(const Common& c, const std::string& n_text, const std::string& p_text, const std::string& m_text,
              std::optional<unsigned> q_max, std::ostream& out) {
  const auto ns = range_or_throw("n", n_text);
  const auto ps = range_or_throw("p", p_text);
  const auto ms = m_text.empty() ? std::vector<std::size_t>{} : range_or_throw("m", m_text);
  std::vector<std::size_t> q_list;
  if (q_max) {
    q_list.push_back(*q_max);
  } else {
    for (std::size_t p : ps) q_list.push_back(default_q_max(static_cast<unsigned>(p)));
  }
  guard(c.force, ns, ps, *std::max_element(q_list.begin(), q_list.end()));

  TableRequest request{ns, as_unsigned(ps), ms, q_max};
  std::vector<TableRow> rows;
  try {
    rows = generate_table(request, c.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.format == "csv") {
    emit(c, table_to_csv(rows), out);
  } else if (c.format == "json") {
    nlohmann::json config{{"command", "table"},
                          {"n", range_json(ns)},
                          {"p", range_json(ps)},
                          {"m", ms.empty() ? nlohmann::json("all") : range_json(ms)},
                          {"q_max", q_max ? nlohmann::json(*q_max) : nlohmann::json("default")}};
    emit(c, dump(table_to_json(rows, config)), out);
  } else {
    emit(c, table_to_text(rows), out);
  }
  return kSuccess;
}

int cmd_verify(const Common& c, const std::vector<std::string>& suites, const std::string& n_text,
               const std::string& p_text, const std::string& m_text, unsigned q_max, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : suites) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!is_suite_name(item)) throw UsageError("unknown suite: " + item);
      names.push_back(item);
    }
  }
  if (names.empty()) throw UsageError("--suite is required");
  const auto ns = range_or_throw("n", n_text);
  const auto ps = p_text.empty() ? std::vector<std::size_t>{0, 1, 2} : range_or_throw("p", p_text);
  const auto ms = m_text.empty() ? std::vector<std::size_t>{} : range_or_throw("m", m_text);
  guard(c.force, ns, ps, q_max);

  const VerifyRequest request{names, ns, as_unsigned(ps), ms, q_max};
  const auto checks = run_suites(request, c.jobs);
  if (c.format == "csv") {
    emit(c, checks_to_csv(checks), out);
  } else if (c.format == "json") {
    nlohmann::json config{{"command", "verify"}, {"suites", names},   {"n", range_json(ns)},
                          {"p", range_json(ps)}, {"m", ms.empty() ? nlohmann::json("all") : range_json(ms)},
                          {"q_max", q_max}};
    emit(c, dump(checks_to_json(checks, config)), out);
  } else {
    emit(c, checks_to_text(checks), out);
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.passed; });
  return ok ? kSuccess : kCheckFailed;
}

int cmd_kernel(const Common& c, std::size_t n, unsigned p, std::size_t m, std::optional<unsigned> q_max_opt,
               bool with_basis, std::ostream& out) {
  if (n == 0) throw UsageError("--n must be >= 1");
  if (m > n) throw UsageError("--m must satisfy 0 <= m <= n");
  const unsigned q_max = q_max_opt.value_or(default_q_max(p));
  guard(c.force, {n}, {p}, q_max);

  const KernelOptions options{c.jobs, with_basis};
  // Index zero goes through the block decomposition, which needs no truncation.
  const KernelReport report = m == 0 && !q_max_opt ? K_total_m0(n, p, options) : bounded_kernel(n, p, m, q_max, options);
  const bool truncated = !(m == 0 && !q_max_opt);

  if (c.format == "json") {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = {{"command", "kernel"}, {"n", n}, {"p", p}, {"m", m}, {"q_max", truncated ? nlohmann::json(q_max) : nlohmann::json(nullptr)}};
    doc["dim"] = report.total;
    doc["status"] = to_string(report.status);
    if (!report.per_block.empty()) {
      doc["per_block"] = nlohmann::json::array();
      for (const auto& b : report.per_block) doc["per_block"].push_back({{"q", b.q}, {"dim", b.dim}});
    }
    if (with_basis) doc["basis"] = kernel_basis_to_json(report);
    emit(c, dump(doc), out);
  } else if (c.format == "csv") {
    std::ostringstream os;
    if (with_basis) {
      os << "vector,I,J,coeff\n";
      const auto basis = kernel_basis_to_json(report);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& term : basis[j]) {
          auto join = [](const nlohmann::json& a) {
            std::string s;
            for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i].get<unsigned>());
            return s;
          };
          os << j + 1 << ',' << join(term["I"]) << ',' << join(term["J"]) << ',' << term["coeff"].get<std::string>()
             << '\n';
        }
      }
    } else {
      os << "n,p,m,q_max,dim,status\n"
         << n << ',' << p << ',' << m << ',' << (truncated ? std::to_string(q_max) : "") << ',' << report.total << ','
         << to_string(report.status) << '\n';
    }
    emit(c, os.str(), out);
  } else {
    std::ostringstream os;
    os << "n=" << n << " p=" << p << " m=" << m;
    if (truncated) os << " q_max=" << q_max;
    os << "\ndim " << report.total << " (" << to_string(report.status) << ")\n";
    for (const auto& b : report.per_block) os << "  K^{" << b.q << "," << p << "}: " << b.dim << "\n";
    if (with_basis) os << kernel_basis_to_text(report);
    emit(c, os.str(), out);
  }
  return kSuccess;
}

int cmd_dims(const Common& c, const std::string& n_text, std::ostream& out) {
  const auto ns = range_or_throw("n", n_text);
  if (std::find(ns.begin(), ns.end(), 0) != ns.end()) throw UsageError("--n must be >= 1");
  guard(c.force, ns, {}, std::nullopt);

  struct Row {
    std::size_t n;
    std::uint64_t rank1, rank2, bound1, bound2, k0_1, k0_2;
    LemmaDimsReport lemma;
  };
  std::vector<Row> rows(ns.size());
  const long count = static_cast<long>(ns.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(c.jobs, 1))
  for (long i = 0; i < count; ++i) {
    const std::size_t n = ns[i];
    rows[i] = {n,
               sym_rank(n, 1),
               sym_rank(n, 2),
               killing_bound(n, 1),
               killing_bound(n, 2),
               closed_form_K0(n, 1),
               closed_form_K0(n, 2),
               lemma_dims(n)};
  }
  bool ok = true;
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = {{"command", "dims"}, {"n", range_json(ns)}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      ok = ok && r.lemma.agree();
      doc["rows"].push_back({{"n", r.n},
                             {"sym_rank_1", r.rank1},
                             {"sym_rank_2", r.rank2},
                             {"killing_bound_1", r.bound1},
                             {"killing_bound_2", r.bound2},
                             {"K0_p1", r.k0_1},
                             {"K0_p2", r.k0_2},
                             {"K11", r.lemma.computed.k11},
                             {"K12", r.lemma.computed.k12},
                             {"K22", r.lemma.computed.k22},
                             {"lemmas_agree", r.lemma.agree()}});
    }
    os << dump(doc);
  } else {
    const bool csv = c.format == "csv";
    const char* sep = csv ? "," : "\t";
    os << "n" << sep << "sym_rank_1" << sep << "sym_rank_2" << sep << "killing_bound_1" << sep << "killing_bound_2"
       << sep << "K0_p1" << sep << "K0_p2" << sep << "K11" << sep << "K12" << sep << "K22" << sep << "lemmas_agree\n";
    for (const auto& r : rows) {
      ok = ok && r.lemma.agree();
      os << r.n << sep << r.rank1 << sep << r.rank2 << sep << r.bound1 << sep << r.bound2 << sep << r.k0_1 << sep
         << r.k0_2 << sep << r.lemma.computed.k11 << sep << r.lemma.computed.k12 << sep << r.lemma.computed.k22 << sep
         << (r.lemma.agree() ? "true" : "false") << "\n";
    }
  }
  emit(c, os.str(), out);
  return ok ? kSuccess : kCheckFailed;
}

}  // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_number(text.substr(0, dots));
    const std::size_t hi = parse_number(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw std::invalid_argument("empty range");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact kernels of the Witten-deformed model operator on symmetric tensors"};
  app.require_subcommand(1);

  Common table_common, verify_common, kernel_common, dims_common;
  std::string t_n, t_p, t_m;
  std::optional<unsigned> t_q;
  auto* table = app.add_subcommand("table", "Tabulate kernel dimensions");
  table->add_option("--n", t_n, "Dimension range, e.g. 1..5")->required();
  table->add_option("--p", t_p, "Symmetric degree range")->required();
  table->add_option("--m", t_m, "Morse index range (default: every 0..n)");
  table->add_option("--qmax", t_q, "Hermite truncation for m > 0 (default 2p+2)");
  add_common(table, table_common);

  std::vector<std::string> v_suites;
  std::string v_n, v_p, v_m;
  unsigned v_q = 4;
  auto* verify = app.add_subcommand("verify", "Check operator identities exactly");
  verify->add_option("--suite", v_suites, "Suite name(s) or 'all'")->required();
  verify->add_option("--n", v_n, "Dimension range")->required();
  verify->add_option("--p", v_p, "Symmetric degree range (default 0..2)");
  verify->add_option("--m", v_m, "Morse index range (default: every 0..n)");
  verify->add_option("--qmax", v_q, "Largest Hermite degree checked");
  add_common(verify, verify_common);

  std::size_t k_n = 0, k_m = 0;
  unsigned k_p = 0;
  std::optional<unsigned> k_q;
  bool k_basis = false;
  auto* kernel = app.add_subcommand("kernel", "Kernel dimension and basis for one model operator");
  kernel->add_option("--n", k_n, "Dimension")->required();
  kernel->add_option("--p", k_p, "Symmetric degree")->required();
  kernel->add_option("--m", k_m, "Morse index");
  kernel->add_option("--qmax", k_q, "Hermite truncation (default 2p+2 when m > 0)");
  kernel->add_flag("--basis", k_basis, "Dump the canonical kernel basis");
  add_common(kernel, kernel_common);

  std::string d_n;
  auto* dims = app.add_subcommand("dims", "Closed-form dimension formulas next to computed values");
  dims->add_option("--n", d_n, "Dimension range")->required();
  add_common(dims, dims_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto selected = app.get_subcommands();
    out << (selected.empty() ? app.help() : selected.front()->help());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (table->parsed()) return cmd_table(table_common, t_n, t_p, t_m, t_q, out);
    if (verify->parsed()) return cmd_verify(verify_common, v_suites, v_n, v_p, v_m, v_q, out);
    if (kernel->parsed()) return cmd_kernel(kernel_common, k_n, k_p, k_m, k_q, k_basis, out);
    if (dims->parsed()) return cmd_dims(dims_common, d_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace killing::cli
