#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ratgamma/gamma_expansions.hpp"
#include "ratgamma/identity_suite.hpp"

namespace ratgamma::io {

// Column-oriented text table; every cell is already formatted.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Free-form key/value notes (forced evaluation, reduction steps). Written
  // into the JSON form only; CSV consumers see the plain table.
  std::vector<std::pair<std::string, std::string>> meta;
};

inline constexpr const char* kTraceHeader = "n,bracket_exact,term,partial_sum,ref_value,rel_error";
inline constexpr const char* kIdentityHeader = "id,N,lhs,rhs,abs_err,tail_est,pass";
inline constexpr const char* kBoundHeader = "n,value_exact,value_float,lo,hi";

std::vector<std::string> split_header(const std::string& header);

// RFC 4180 style: cells holding commas, quotes or newlines are quoted.
void write_csv(std::ostream& out, const Table& t);
Table read_csv(std::istream& in);
// {"columns": [...], "rows": [{col: cell, ...}, ...], "meta": {...}}
std::string to_json(const Table& t, int indent = 2);

// digits = 0 prints every value with enough digits to round-trip.
Table trace_table(const ConvergenceTrace& trace, int digits = 0);
Table identity_table(const std::vector<identities::CaseResult>& results, int digits = 0);

}  // namespace ratgamma::io
