#include "spikebench/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace spikebench {

using nlohmann::json;

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + name);
}

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

const CellResult* find_cell(const ExperimentReport& report, ModelKind m, SolverKind s,
                            TargetKind f, bool noisy) {
    for (const auto& c : report.cells)
        if (c.model == m && c.solver == s && c.function == f && c.noisy == noisy) return &c;
    return nullptr;
}

}  // namespace

std::string render_table(const ExperimentReport& report) {
    // Collect the axes actually present, in canonical order.
    std::vector<ModelKind> models;
    std::vector<SolverKind> solvers;
    std::vector<TargetKind> fns;
    std::vector<bool> noises;
    for (ModelKind m : {ModelKind::Lif, ModelKind::Fhn, ModelKind::Izh, ModelKind::Hh})
        for (const auto& c : report.cells)
            if (c.model == m) { models.push_back(m); break; }
    for (SolverKind s : {SolverKind::Euler, SolverKind::Rk4})
        for (const auto& c : report.cells)
            if (c.solver == s) { solvers.push_back(s); break; }
    for (TargetKind f : {TargetKind::Square, TargetKind::Discontinuity, TargetKind::Sine})
        for (const auto& c : report.cells)
            if (c.function == f) { fns.push_back(f); break; }
    for (bool n : {false, true})
        for (const auto& c : report.cells)
            if (c.noisy == n) { noises.push_back(n); break; }

    std::ostringstream os;
    os << "relative L2 error (# of output spikes)  [seed " << report.seed << "]\n";
    os << "model solver";
    for (bool n : noises)
        for (TargetKind f : fns)
            os << " | " << (n ? "noisy:" : "") << to_string(f);
    os << " | sim/train s\n";
    for (ModelKind m : models) {
        for (SolverKind s : solvers) {
            os << to_string(m) << ' ' << to_string(s);
            double sim_t = 0.0, train_t = 0.0;
            for (bool n : noises) {
                for (TargetKind f : fns) {
                    os << " | ";
                    const CellResult* c = find_cell(report, m, s, f, n);
                    if (!c) {
                        os << "-";
                    } else if (!c->ok()) {
                        os << "ERROR";
                    } else {
                        os << sci(c->l2_relative) << " (" << c->output_spike_count << ")";
                        sim_t += c->sim_time;
                        train_t += c->train_time;
                    }
                }
            }
            os << " | " << sci(sim_t) << "/" << sci(train_t) << '\n';
        }
    }
    for (const auto& c : report.cells)
        if (!c.ok()) os << "# " << c.name() << " failed: " << c.error << '\n';
    return os.str();
}

namespace {

json cell_to_json(const CellResult& c) {
    json j{{"model", to_string(c.model)},
           {"solver", to_string(c.solver)},
           {"function", to_string(c.function)},
           {"noise", c.noisy ? "on" : "off"},
           {"l2_sum", c.l2_sum},
           {"l2_relative", c.l2_relative},
           {"output_spike_count", c.output_spike_count},
           {"sim_time_s", c.sim_time},
           {"train_time_s", c.train_time}};
    if (!c.ok()) j["error"] = c.error;
    return j;
}

CellResult cell_from_json(const json& j) {
    CellResult c;
    c.model = model_kind_from_string(j.at("model").get<std::string>());
    c.solver = solver_kind_from_string(j.at("solver").get<std::string>());
    c.function = target_kind_from_string(j.at("function").get<std::string>());
    c.noisy = j.at("noise").get<std::string>() == "on";
    c.l2_sum = j.at("l2_sum").get<double>();
    c.l2_relative = j.at("l2_relative").get<double>();
    c.output_spike_count = j.at("output_spike_count").get<std::size_t>();
    c.sim_time = j.at("sim_time_s").get<double>();
    c.train_time = j.at("train_time_s").get<double>();
    if (j.contains("error")) c.error = j.at("error").get<std::string>();
    return c;
}

}  // namespace

std::string render_json(const ExperimentReport& report) {
    json j;
    j["meta"] = {{"seed", report.seed},
                 {"version", report.version},
                 {"config", report.config_summary}};
    j["cells"] = json::array();
    for (const auto& c : report.cells) j["cells"].push_back(cell_to_json(c));
    return j.dump(2) + "\n";
}

ExperimentReport parse_report_json(const std::string& text) {
    const json j = json::parse(text);
    ExperimentReport report;
    report.seed = j.at("meta").at("seed").get<std::uint64_t>();
    report.version = j.at("meta").at("version").get<std::string>();
    report.config_summary = j.at("meta").at("config").get<std::string>();
    for (const auto& jc : j.at("cells")) report.cells.push_back(cell_from_json(jc));
    return report;
}

std::string render_csv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "model,solver,function,noise,l2_sum,l2_relative,output_spike_count,"
          "sim_time_s,train_time_s,error\n";
    for (const auto& c : report.cells) {
        os << to_string(c.model) << ',' << to_string(c.solver) << ',' << to_string(c.function)
           << ',' << (c.noisy ? "on" : "off") << ',' << c.l2_sum << ',' << c.l2_relative << ','
           << c.output_spike_count << ',' << c.sim_time << ',' << c.train_time << ',' << c.error
           << '\n';
    }
    return os.str();
}

std::string render_report(const ExperimentReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Table: return render_table(report);
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Csv: return render_csv(report);
    }
    return {};
}

void write_text_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
    write_text_file(path, render_report(report, format));
}

}  // namespace spikebench
