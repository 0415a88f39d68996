#include "fdepth/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fdepth/depth.hpp"

namespace fdepth {

std::string format_double(double value) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

namespace {

std::vector<std::string> split_csv_line(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_field(const std::string& field, const std::string& source, size_t row,
                   size_t col) {
    double value = 0.0;
    auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc() || result.ptr != field.data() + field.size())
        throw Error(Errc::parse_error, source + ": row " + std::to_string(row) +
                                           ", column " + std::to_string(col) +
                                           ": not a number: '" + field + "'");
    return value;
}

}  // namespace

FunctionalSample read_curves(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(Errc::parse_error, source_name + ": empty input");
    auto header = split_csv_line(std::move(line));
    if (header.size() < 3)
        throw Error(Errc::parse_error,
                    source_name + ": header needs an id column and at least 2 abscissae");

    FunctionalSample sample;
    size_t v = header.size() - 1;
    sample.grid.points.reserve(v);
    for (size_t col = 1; col < header.size(); ++col)
        sample.grid.points.push_back(parse_field(header[col], source_name, 1, col + 1));

    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv_line(std::move(line));
        if (fields.size() != v + 1)
            throw Error(Errc::parse_error,
                        source_name + ": row " + std::to_string(row) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(v + 1));
        sample.ids.push_back(fields[0]);
        for (size_t col = 1; col < fields.size(); ++col)
            sample.values.push_back(parse_field(fields[col], source_name, row, col + 1));
        ++sample.n;
    }
    validate_sample(sample);
    return sample;
}

FunctionalSample read_curves_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse_error, "cannot open " + path);
    return read_curves(in, path);
}

void write_curves(std::ostream& out, const FunctionalSample& sample) {
    out << "id";
    for (double t : sample.grid.points)
        out << ',' << format_double(t);
    out << '\n';
    for (size_t i = 0; i < sample.n; ++i) {
        out << sample.ids[i];
        for (double value : sample.curve(i))
            out << ',' << format_double(value);
        out << '\n';
    }
}

void write_labels(std::ostream& out, const LabeledSample& labeled) {
    out << "id,contaminated,sign\n";
    for (size_t i = 0; i < labeled.sample.n; ++i)
        out << labeled.sample.ids[i] << ',' << int(labeled.contaminated[i]) << ','
            << int(labeled.signs[i]) << '\n';
}

void write_depth_table(std::ostream& out, const FunctionalSample& sample,
                       const DepthVector& depths) {
    auto ranks = competition_ranks(depths);
    out << "id,depth,rank\n";
    for (size_t i = 0; i < sample.n; ++i)
        out << sample.ids[i] << ',' << format_double(depths.values[i]) << ','
            << ranks[i] << '\n';
}

void write_screen_table(std::ostream& out, const FunctionalSample& sample,
                        const DepthVector& depths, size_t trim_count) {
    auto ranks = competition_ranks(depths);
    RankOrder order = rank_order(depths);
    std::vector<char> flagged(sample.n, 0);
    for (size_t pos = sample.n - trim_count; pos < sample.n; ++pos)
        flagged[order.order[pos]] = 1;
    out << "id,depth,rank,flagged\n";
    for (size_t i = 0; i < sample.n; ++i)
        out << sample.ids[i] << ',' << format_double(depths.values[i]) << ','
            << ranks[i] << ',' << int(flagged[i]) << '\n';
}

void write_estimate(std::ostream& out, const Grid& grid, const Curve& estimate,
                    const std::string& id) {
    out << "id";
    for (double t : grid.points)
        out << ',' << format_double(t);
    out << '\n' << id;
    for (double value : estimate)
        out << ',' << format_double(value);
    out << '\n';
}

void write_study_csv(std::ostream& out, const StudyReport& report) {
    out << "method";
    for (int model : report.config.models)
        out << ",M" << model << "_mean,M" << model << "_sd";
    out << '\n';
    for (size_t row = 0; row < report.rows.size(); ++row) {
        out << report.rows[row];
        for (const auto& table : report.tables)
            out << ',' << format_double(table.mean[row]) << ','
                << format_double(table.sd[row]);
        out << '\n';
    }
}

void write_study_text(std::ostream& out, const StudyReport& report) {
    const auto& cfg = report.config;
    out << "adjusted integrated errors: mean (sd) per model\n";
    out << "n=" << cfg.n << " V=" << cfg.v << " q=" << format_double(cfg.q)
        << " M=" << format_double(cfg.m_size) << " alpha=" << format_double(cfg.alpha)
        << " R=" << cfg.replications << " K=" << cfg.k_parts << " seed=" << cfg.seed
        << '\n';
    char cell[64];
    std::snprintf(cell, sizeof cell, "%-7s", "");
    out << cell;
    for (int model : cfg.models) {
        std::snprintf(cell, sizeof cell, " %14s", ("M" + std::to_string(model)).c_str());
        out << cell;
    }
    out << '\n';
    for (size_t row = 0; row < report.rows.size(); ++row) {
        std::snprintf(cell, sizeof cell, "%-7s", report.rows[row].c_str());
        out << cell;
        for (const auto& table : report.tables) {
            std::snprintf(cell, sizeof cell, " %6.3f (%5.3f)", table.mean[row],
                          table.sd[row]);
            out << cell;
        }
        out << '\n';
    }
}

void write_study_raw(std::ostream& out, const StudyReport& report) {
    out << "model,method,replication,ei,eai\n";
    for (size_t m = 0; m < report.tables.size(); ++m) {
        const auto& table = report.tables[m];
        for (size_t row = 0; row < table.rows.size(); ++row)
            for (size_t rep = 0; rep < table.ei[row].size(); ++rep)
                out << report.config.models[m] << ',' << table.rows[row] << ',' << rep
                    << ',' << format_double(table.ei[row][rep]) << ','
                    << format_double(table.eai[row][rep]) << '\n';
    }
}

void write_agreement_table(std::ostream& out, const RankAgreementReport& report) {
    out << "position,mean_rank,sd_rank\n";
    for (size_t pos = 0; pos < report.mean_rank.size(); ++pos)
        out << pos + 1 << ',' << format_double(report.mean_rank[pos]) << ','
            << format_double(report.sd_rank[pos]) << '\n';
}

void write_agreement_correlations(std::ostream& out, const RankAgreementReport& report) {
    out << "repeat,spearman,spearman_deepest,spearman_least\n";
    for (size_t rep = 0; rep < report.correlation.size(); ++rep)
        out << rep << ',' << format_double(report.correlation[rep]) << ','
            << format_double(report.correlation_deep[rep]) << ','
            << format_double(report.correlation_tail[rep]) << '\n';
}

}  // namespace fdepth
