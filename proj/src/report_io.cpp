#include "galocus/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace galocus {

OutputFormat parse_output_format(const std::string& label) {
    if (label == "table") return OutputFormat::Table;
    if (label == "csv") return OutputFormat::Csv;
    if (label == "json") return OutputFormat::Json;
    throw std::invalid_argument("format must be one of table, csv, json");
}

std::string render_table(const CensusReport& report) {
    std::ostringstream out;
    out << "Galois subspace components  (N = " << report.n - 1 << ", n = " << report.n
        << ", j = " << j_class_name(report.j) << ")\n";
    out << std::setw(9) << "dimension"
        << "  " << std::setw(5) << "count"
        << "\n";
    for (std::uint64_t dim = 0; dim + 2 <= report.n; ++dim) {
        std::uint64_t count = 0;
        for (const auto& rec : report.records) {
            if (rec.dimension == dim) count = rec.count;
        }
        out << std::setw(9) << dim << "  " << std::setw(5) << count << "\n";
    }
    out << "Total number: " << report.total_components << "\n";
    return out.str();
}

std::string render_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "dimension,count,group_order\n";
    for (auto it = report.records.rbegin(); it != report.records.rend(); ++it) {
        out << it->dimension << "," << it->count << "," << it->group_order << "\n";
    }
    return out.str();
}

std::string render_json(const CensusReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = report.n;
    doc["N"] = report.n - 1;
    doc["j"] = j_class_name(report.j);
    doc["components"] = nlohmann::ordered_json::array();
    for (const auto& rec : report.records) {
        nlohmann::ordered_json comp;
        comp["dimension"] = rec.dimension;
        comp["count"] = rec.count;
        comp["group_order"] = rec.group_order;
        comp["constituents"] = nlohmann::ordered_json::array();
        for (const auto& c : rec.constituents) {
            comp["constituents"].push_back(
                {{"ell", c.ell}, {"h_order", c.h_order}, {"psi", c.psi_count}});
        }
        comp["fiber_dim"] = rec.fiber_dim ? nlohmann::ordered_json(*rec.fiber_dim)
                                          : nlohmann::ordered_json(nullptr);
        comp["base"] = rec.base ? nlohmann::ordered_json(*rec.base)
                                : nlohmann::ordered_json(nullptr);
        doc["components"].push_back(std::move(comp));
    }
    doc["total"] = report.total_components;
    return doc.dump() + "\n";
}

CensusReport parse_json_report(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad census JSON: ") + e.what());
    }
    try {
        if (doc.at("schema").get<int>() != 1) {
            throw std::invalid_argument("unsupported census JSON schema");
        }
        CensusReport report;
        report.n = doc.at("n").get<std::uint64_t>();
        report.j = parse_j_class(doc.at("j").get<std::string>());
        for (const auto& comp : doc.at("components")) {
            ComponentRecord rec;
            rec.dimension = comp.at("dimension").get<std::uint64_t>();
            rec.count = comp.at("count").get<std::uint64_t>();
            rec.group_order = comp.at("group_order").get<std::uint64_t>();
            for (const auto& c : comp.at("constituents")) {
                rec.constituents.push_back({c.at("ell").get<int>(),
                                            c.at("h_order").get<std::uint64_t>(),
                                            c.at("psi").get<std::uint64_t>()});
            }
            if (!comp.at("fiber_dim").is_null()) {
                rec.fiber_dim = comp.at("fiber_dim").get<std::uint64_t>();
            }
            if (!comp.at("base").is_null()) {
                rec.base = comp.at("base").get<std::string>();
            }
            report.records.push_back(std::move(rec));
        }
        report.total_components = doc.at("total").get<std::uint64_t>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad census JSON: ") + e.what());
    }
}

std::string render(const CensusReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: return render_table(report);
        case OutputFormat::Csv: return render_csv(report);
        case OutputFormat::Json: return render_json(report);
    }
    throw std::invalid_argument("render: bad format");
}

}  // namespace galocus
