#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "th/factorization.hpp"
#include "th/fredholm.hpp"
#include "th/mellin.hpp"
#include "th/sections.hpp"

namespace th {

/// Serialized symbol description: p, smooth part (winding + log
/// coefficients), jump list.  Angles are radians in [0, 2*pi).
struct SymbolSpec {
    double p = 2.0;
    int winding = 0;
    std::map<int, cplx> log_coeffs;
    std::vector<std::pair<double, cplx>> jumps;  // (theta, beta)
};

SymbolSpec parse_spec(const std::string& text);
SymbolSpec spec_from_file(const std::string& path);
std::string serialize_spec(const SymbolSpec& spec);

PCSymbol to_symbol(const SymbolSpec& spec);
SymbolSpec from_symbol(const PCSymbol& sym);

inline constexpr int kReportSchemaVersion = 1;

std::string analyze_report_json(const SymbolSpec& spec, const FredholmReport& rep);
std::string factorize_report_json(const SymbolSpec& spec, const AsymmetricFactorization& fact,
                                  const ValidationReport& val);

/// Matrix file: first line "N", then N lines of N comma-separated "re:im".
void write_matrix_file(std::ostream& os, const OperatorSection& section);

/// Sweep CSV: header "z,re,im,modulus", data rows ascending in z, then the
/// two endpoint rows with z printed literally as "+inf" and "-inf".
void write_sweep_csv(std::ostream& os, const SweepReport& rep);

}  // namespace th
