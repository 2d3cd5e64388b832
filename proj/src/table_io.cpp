#include "killing/table_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace killing {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

nlohmann::json opt_json(const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

void check_schema(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("schema_version", 0) != kSchemaVersion) {
    throw std::invalid_argument("unsupported or missing schema_version");
  }
}

}  // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,p,m,q_max,dim,status\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.p << ',' << r.m << ',' << opt(r.q_max) << ',' << r.dim << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

std::vector<TableRow> table_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "n,p,m,q_max,dim,status") {
    throw std::invalid_argument("table CSV: unexpected header");
  }
  std::vector<TableRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw std::invalid_argument("table CSV: expected 6 fields in '" + line + "'");
    TableRow r;
    r.n = std::stoul(f[0]);
    r.p = static_cast<unsigned>(std::stoul(f[1]));
    r.m = std::stoul(f[2]);
    if (!f[3].empty()) r.q_max = static_cast<unsigned>(std::stoul(f[3]));
    r.dim = std::stoul(f[4]);
    r.status = parse_status(f[5]);
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows, const nlohmann::json& config) {
  nlohmann::json out;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config;
  out["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    out["rows"].push_back({{"n", r.n},
                           {"p", r.p},
                           {"m", r.m},
                           {"q_max", opt_json(r.q_max)},
                           {"dim", r.dim},
                           {"status", to_string(r.status)}});
  }
  return out;
}

std::vector<TableRow> table_from_json(const nlohmann::json& doc) {
  check_schema(doc);
  std::vector<TableRow> rows;
  for (const auto& j : doc.at("rows")) {
    TableRow r;
    r.n = j.at("n").get<std::size_t>();
    r.p = j.at("p").get<unsigned>();
    r.m = j.at("m").get<std::size_t>();
    if (!j.at("q_max").is_null()) r.q_max = j.at("q_max").get<unsigned>();
    r.dim = j.at("dim").get<std::size_t>();
    r.status = parse_status(j.at("status").get<std::string>());
    rows.push_back(r);
  }
  return rows;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(4) << "p" << std::setw(4) << "m" << std::setw(7) << "q_max"
     << std::setw(8) << "dim" << "status\n";
  for (const auto& r : rows) {
    os << std::setw(4) << r.n << std::setw(4) << r.p << std::setw(4) << r.m << std::setw(7)
       << (r.q_max ? std::to_string(*r.q_max) : "-") << std::setw(8) << r.dim << to_string(r.status) << '\n';
  }
  return os.str();
}

nlohmann::json checks_to_json(const std::vector<Check>& checks, const nlohmann::json& config) {
  nlohmann::json out;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config;
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    out["checks"].push_back({{"suite", c.suite},
                             {"name", c.name},
                             {"n", c.n},
                             {"p", opt_json(c.p)},
                             {"m", opt_json(c.m)},
                             {"q_max", opt_json(c.q_max)},
                             {"passed", c.passed},
                             {"detail", c.detail}});
  }
  return out;
}

std::vector<Check> checks_from_json(const nlohmann::json& doc) {
  check_schema(doc);
  std::vector<Check> out;
  for (const auto& j : doc.at("checks")) {
    Check c;
    c.suite = j.at("suite").get<std::string>();
    c.name = j.at("name").get<std::string>();
    c.n = j.at("n").get<std::size_t>();
    if (!j.at("p").is_null()) c.p = j.at("p").get<unsigned>();
    if (!j.at("m").is_null()) c.m = j.at("m").get<std::size_t>();
    if (!j.at("q_max").is_null()) c.q_max = j.at("q_max").get<unsigned>();
    c.passed = j.at("passed").get<bool>();
    c.detail = j.at("detail").get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

std::string checks_to_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "suite,name,n,p,m,q_max,passed,detail\n";
  for (const auto& c : checks) {
    os << csv_escape(c.suite) << ',' << csv_escape(c.name) << ',' << c.n << ',' << opt(c.p) << ',' << opt(c.m)
       << ',' << opt(c.q_max) << ',' << (c.passed ? "true" : "false") << ',' << csv_escape(c.detail) << '\n';
  }
  return os.str();
}

std::string checks_to_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.suite << " " << c.name << " n=" << c.n;
    if (c.p) os << " p=" << *c.p;
    if (c.m) os << " m=" << *c.m;
    if (c.q_max) os << " q_max=" << *c.q_max;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
    if (!c.passed) ++failed;
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

namespace {

std::vector<std::pair<const BlockBasis*, std::size_t>> layout_blocks(const KernelReport& report,
                                                                     std::vector<std::shared_ptr<const BlockBasis>>& keep) {
  std::vector<std::pair<const BlockBasis*, std::size_t>> out;
  std::size_t offset = 0;
  for (const auto& key : report.layout) {
    keep.push_back(build_block(report.spec.n, key.q, key.p));
    out.push_back({keep.back().get(), offset});
    offset += keep.back()->size();
  }
  return out;
}

template <typename Visit>
void for_each_term(const KernelReport& report, Visit&& visit) {
  if (!report.basis) return;
  std::vector<std::shared_ptr<const BlockBasis>> keep;
  const auto blocks = layout_blocks(report, keep);
  const auto& m = report.basis->matrix;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      auto it = std::upper_bound(blocks.begin(), blocks.end(), e.index,
                                 [](std::size_t i, const auto& b) { return i < b.second; });
      const auto& [block, offset] = *std::prev(it);
      const auto [hi, sj] = block->pair(e.index - offset);
      visit(j, hi, sj, e.value);
    }
  }
}

}  // namespace

nlohmann::json kernel_basis_to_json(const KernelReport& report) {
  nlohmann::json vectors = nlohmann::json::array();
  if (report.basis) {
    for (std::size_t j = 0; j < report.basis->dim(); ++j) vectors.push_back(nlohmann::json::array());
  }
  for_each_term(report, [&](std::size_t j, const MultiIndex& i, const MultiIndex& s, const Rational& v) {
    vectors[j].push_back({{"I", i.components()}, {"J", s.components()}, {"coeff", to_fraction_string(v)}});
  });
  return vectors;
}

std::string kernel_basis_to_text(const KernelReport& report) {
  std::ostringstream os;
  std::size_t current = static_cast<std::size_t>(-1);
  for_each_term(report, [&](std::size_t j, const MultiIndex& i, const MultiIndex& s, const Rational& v) {
    if (j != current) {
      if (current != static_cast<std::size_t>(-1)) os << '\n';
      os << "v" << j + 1 << " =";
      current = j;
    }
    os << " " << (sgn(v) < 0 ? "-" : "+") << " " << to_fraction_string(abs(v)) << " H" << i.to_string() << " e"
       << s.to_string();
  });
  if (current != static_cast<std::size_t>(-1)) os << '\n';
  return os.str();
}

}  // namespace killing
