#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgt/equilibrium.hpp"

namespace qgt {

// Fixed-format number rendering: 12 significant digits, shortest form,
// period decimal separator, no locale dependence. All file output goes
// through this so identical inputs give byte-identical files.
std::string format_number(double value);

std::string sweep_csv_header(ElementKind kind);

// CSV rows "p,R,S,T,U,form" (or "p,alpha,beta,sigma,form"), one per record,
// trailing newline after each row.
std::string sweep_to_csv(std::span<const SweepRecord> records, ElementKind kind);

// Inverse of sweep_to_csv; throws std::invalid_argument on malformed text.
std::vector<SweepRecord> sweep_from_csv(std::string_view csv_text);

std::string sweep_to_json(std::span<const SweepRecord> records, ElementKind kind);

}  // namespace qgt
