// output.hpp: CSV, JSON and SVG heatmap emission of sweep results

#pragma once

#include <string>

#include "otto/sweep.hpp"

namespace otto::output {

// Fields accepted by the SVG renderer.
inline constexpr std::string_view kSvgFields[] = {"regime", "Q_h", "Q_c", "W", "figure_of_merit", "power",
                                                 "residual"};

std::string to_csv(const sweep::GridResult& result);
std::string to_json(const sweep::GridResult& result);
std::string to_svg(const sweep::GridResult& result, std::string_view field, int width = 900, int height = 700);

// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const sweep::GridResult& result, const std::string& path);
void emit_json(const sweep::GridResult& result, const std::string& path);
void emit_svg(const sweep::GridResult& result, const std::string& path, std::string_view field,
              int width = 900, int height = 700);

// Writes every output declared in result.config.
void emit_declared(const sweep::GridResult& result);

// Fill colours of the three regime classes.
inline constexpr std::string_view kEngineFill = "#2ca02c";
inline constexpr std::string_view kRefrigeratorFill = "#1f77b4";
inline constexpr std::string_view kNoneFill = "#ffffff";

} // namespace otto::output
