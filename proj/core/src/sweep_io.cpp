#include "qgt/sweep_io.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

namespace qgt {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("sweep CSV: bad number '" + std::string(text) + "'");
  }
  return value;
}

constexpr std::array<const char*, 4> kRstuNames{"R", "S", "T", "U"};
constexpr std::array<const char*, 3> kAbsNames{"alpha", "beta", "sigma"};

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf;
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_number: conversion failed");
  }
  return std::string(buf.data(), ptr);
}

std::string sweep_csv_header(ElementKind kind) {
  return kind == ElementKind::Rstu ? "p,R,S,T,U,form" : "p,alpha,beta,sigma,form";
}

std::string sweep_to_csv(std::span<const SweepRecord> records, ElementKind kind) {
  std::string out = sweep_csv_header(kind);
  out += '\n';
  for (const SweepRecord& record : records) {
    if (record.elements.kind != kind) {
      throw std::invalid_argument("sweep CSV: record element kind does not match header");
    }
    out += format_number(record.p);
    for (double v : record.elements.values) {
      out += ',';
      out += format_number(v);
    }
    out += ',';
    out += to_string(record.form);
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> sweep_from_csv(std::string_view csv_text) {
  std::vector<std::string_view> lines = split(csv_text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) {
    throw std::invalid_argument("sweep CSV: missing header");
  }

  ElementKind kind;
  if (lines.front() == sweep_csv_header(ElementKind::Rstu)) {
    kind = ElementKind::Rstu;
  } else if (lines.front() == sweep_csv_header(ElementKind::AlphaBetaSigma)) {
    kind = ElementKind::AlphaBetaSigma;
  } else {
    throw std::invalid_argument("sweep CSV: unrecognized header '" + std::string(lines.front()) +
                                "'");
  }
  const std::size_t value_count = kind == ElementKind::Rstu ? 4 : 3;

  std::vector<SweepRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> fields = split(lines[i], ',');
    if (fields.size() != value_count + 2) {
      throw std::invalid_argument("sweep CSV: wrong field count on line " + std::to_string(i + 1));
    }
    SweepRecord record{parse_double(fields[0]), PayoffElements{kind, {}},
                       strategic_form_from_string(fields.back())};
    for (std::size_t k = 0; k < value_count; ++k) {
      record.elements.values.push_back(parse_double(fields[1 + k]));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string sweep_to_json(std::span<const SweepRecord> records, ElementKind kind) {
  nlohmann::ordered_json doc;
  doc["elements"] = kind == ElementKind::Rstu ? "RSTU" : "AlphaBetaSigma";
  doc["records"] = nlohmann::ordered_json::array();
  for (const SweepRecord& record : records) {
    if (record.elements.kind != kind) {
      throw std::invalid_argument("sweep JSON: record element kind does not match document");
    }
    nlohmann::ordered_json row;
    row["p"] = record.p;
    if (kind == ElementKind::Rstu) {
      for (std::size_t k = 0; k < 4; ++k) row[kRstuNames[k]] = record.elements.values[k];
    } else {
      for (std::size_t k = 0; k < 3; ++k) row[kAbsNames[k]] = record.elements.values[k];
    }
    row["form"] = to_string(record.form);
    doc["records"].push_back(std::move(row));
  }
  return doc.dump(2);
}

}  // namespace qgt
