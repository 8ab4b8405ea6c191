#pragma once

#include <string>

#include "spikebench/experiment.hpp"

namespace spikebench {

enum class ReportFormat { Table, Json, Csv };

ReportFormat report_format_from_string(const std::string& name);

// Human-readable grid: one row per model/solver, error with spike count in
// parentheses per function column, noiseless and noisy blocks side by side.
std::string render_table(const ExperimentReport& report);

// Machine formats: {"meta": {...}, "cells": [...]} / one CSV row per cell.
std::string render_json(const ExperimentReport& report);
std::string render_csv(const ExperimentReport& report);

ExperimentReport parse_report_json(const std::string& text);

std::string render_report(const ExperimentReport& report, ReportFormat format);

// Writes to path, or stdout when path is "-". I/O failures carry the path.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace spikebench
