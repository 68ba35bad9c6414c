#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/io.hpp"

namespace ratgamma::io {

namespace {

bool needs_quotes(const std::string& cell) {
  return cell.find_first_of(",\"\n\r") != std::string::npos;
}

void write_cell(std::ostream& out, const std::string& cell) {
  if (!needs_quotes(cell)) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    write_cell(out, row[i]);
  }
  out << '\n';
}

// Reads one record; returns false at end of input.
bool read_row(std::istream& in, std::vector<std::string>& row) {
  row.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string cell;
  bool quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          cell.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  if (quoted) throw DomainError("unterminated quoted CSV cell");
  row.push_back(std::move(cell));
  return true;
}

std::string fmt(const HPReal& x, int digits) { return x.str(digits); }

}  // namespace

std::vector<std::string> split_header(const std::string& header) {
  std::istringstream in(header);
  std::vector<std::string> cols;
  read_row(in, cols);
  return cols;
}

void write_csv(std::ostream& out, const Table& t) {
  write_row(out, t.header);
  for (const auto& r : t.rows) write_row(out, r);
}

Table read_csv(std::istream& in) {
  Table t;
  if (!read_row(in, t.header)) throw DomainError("empty CSV input");
  std::vector<std::string> row;
  while (read_row(in, row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != t.header.size()) {
      throw DomainError("CSV row " + std::to_string(t.rows.size() + 1) + " has " + std::to_string(row.size()) +
                        " cells, header has " + std::to_string(t.header.size()));
    }
    t.rows.push_back(row);
  }
  return t;
}

std::string to_json(const Table& t, int indent) {
  nlohmann::ordered_json j;
  j["columns"] = t.header;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < t.header.size() && i < r.size(); ++i) o[t.header[i]] = r[i];
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  if (!t.meta.empty()) {
    nlohmann::ordered_json m;
    for (const auto& [k, v] : t.meta) m[k] = v;
    j["meta"] = std::move(m);
  }
  return j.dump(indent);
}

Table trace_table(const ConvergenceTrace& trace, int digits) {
  Table t;
  t.header = split_header(kTraceHeader);
  t.meta.emplace_back("series", trace.spec.name());
  t.meta.emplace_back("z", trace.z.str(digits));
  t.meta.emplace_back("region", to_string(trace.region));
  if (trace.forced) t.meta.emplace_back("forced", "evaluated outside the convergence region");
  t.meta.emplace_back("bits", std::to_string(trace.working_bits));
  t.meta.emplace_back("prefix", trace.prefix.str(digits));
  const std::string ref = trace.reference ? trace.reference->str(digits) : std::string();
  for (const auto& r : trace.records) {
    t.rows.push_back({std::to_string(r.n), r.bracket_exact ? r.bracket_exact->str() : std::string(),
                      r.term.str(digits), r.partial_sum.str(digits), ref,
                      r.ref_error ? fmt(*r.ref_error, digits) : std::string()});
  }
  return t;
}

Table identity_table(const std::vector<identities::CaseResult>& results, int digits) {
  Table t;
  t.header = split_header(kIdentityHeader);
  for (const auto& res : results) {
    for (const auto& r : res.rows) {
      std::ostringstream tail;
      tail.precision(6);
      tail << std::scientific << r.tail_est;
      t.rows.push_back({r.id, std::to_string(r.N), fmt(r.lhs, digits), fmt(r.rhs, digits), fmt(r.abs_err, digits),
                        tail.str(), r.pass ? "true" : "false"});
    }
    std::ostringstream note;
    note.precision(4);
    note << "fitted_c=" << res.fitted_c << " slope=" << res.slope << (res.pass ? " pass" : " FAIL");
    t.meta.emplace_back(res.id, note.str());
  }
  return t;
}

}  // namespace ratgamma::io
