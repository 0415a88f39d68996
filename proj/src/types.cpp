#include "fdepth/types.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

namespace fdepth {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::mismatched_length: return "MismatchedLength";
        case Errc::non_finite: return "NonFinite";
        case Errc::too_few_curves: return "TooFewCurves";
        case Errc::bad_grid: return "BadGrid";
        case Errc::bad_indices: return "BadIndices";
        case Errc::bad_j: return "BadJ";
        case Errc::part_too_small: return "PartTooSmall";
        case Errc::not_factorizable: return "NotFactorizable";
        case Errc::parse_error: return "ParseError";
        case Errc::bad_model_id: return "BadModelId";
        case Errc::grid_mismatch: return "GridMismatch";
        case Errc::bad_config: return "BadConfig";
    }
    return "Error";
}

Grid canonical_grid(size_t v) {
    Grid grid;
    grid.points.resize(v);
    for (size_t k = 0; k < v; ++k)
        grid.points[k] = double(k + 1) / double(v);
    return grid;
}

FunctionalSample make_sample(Grid grid, const std::vector<Curve>& curves,
                             std::vector<std::string> ids) {
    FunctionalSample sample;
    sample.grid = std::move(grid);
    sample.n = curves.size();
    size_t v = sample.grid.size();
    sample.values.reserve(sample.n * v);
    for (size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].size() != v)
            throw Error(Errc::mismatched_length,
                        "curve " + std::to_string(i) + " has " +
                            std::to_string(curves[i].size()) + " values, grid has " +
                            std::to_string(v));
        sample.values.insert(sample.values.end(), curves[i].begin(), curves[i].end());
    }
    if (ids.empty()) {
        ids.reserve(sample.n);
        for (size_t i = 0; i < sample.n; ++i)
            ids.push_back(std::to_string(i));
    }
    sample.ids = std::move(ids);
    return sample;
}

const FunctionalSample& validate_sample(const FunctionalSample& sample) {
    const auto& points = sample.grid.points;
    if (points.size() < 2)
        throw Error(Errc::bad_grid, "grid needs at least 2 points, has " +
                                        std::to_string(points.size()));
    for (size_t k = 0; k < points.size(); ++k) {
        if (!std::isfinite(points[k]) || points[k] < 0.0 || points[k] > 1.0)
            throw Error(Errc::bad_grid,
                        "abscissa " + std::to_string(k) + " outside [0,1]");
        if (k > 0 && points[k] <= points[k - 1])
            throw Error(Errc::bad_grid,
                        "abscissae not strictly increasing at index " + std::to_string(k));
    }
    if (sample.n < 2)
        throw Error(Errc::too_few_curves,
                    "need at least 2 curves, have " + std::to_string(sample.n));
    if (sample.values.size() != sample.n * points.size())
        throw Error(Errc::mismatched_length,
                    "value storage holds " + std::to_string(sample.values.size()) +
                        " entries, expected " + std::to_string(sample.n * points.size()));
    for (size_t i = 0; i < sample.n; ++i)
        for (double value : sample.curve(i))
            if (!std::isfinite(value))
                throw Error(Errc::non_finite, "curve " + std::to_string(i) +
                                                  " (" + sample.ids[i] +
                                                  ") has a non-finite value");
    if (sample.ids.size() != sample.n)
        throw Error(Errc::mismatched_length,
                    "id count " + std::to_string(sample.ids.size()) + " differs from n " +
                        std::to_string(sample.n));
    std::unordered_set<std::string> seen;
    for (const auto& id : sample.ids)
        if (!seen.insert(id).second)
            throw Error(Errc::parse_error, "duplicate curve id '" + id + "'");
    return sample;
}

size_t BandMask::count() const {
    size_t total = 0;
    for (uint64_t word : words_)
        total += std::popcount(word);
    return total;
}

double measure(const BandMask& mask) {
    return mask.size() == 0 ? 0.0 : double(mask.count()) / double(mask.size());
}

DepthMethod DepthMethod::parse(const std::string& label) {
    if (label == "BD2") return {Family::bd, 2};
    if (label == "BD3") return {Family::bd, 3};
    if (label == "GBD" || label == "GBD2") return {Family::gbd, 2};
    if (label == "GBD3") return {Family::gbd, 3};
    if (label == "cBD") return {Family::cbd, 2};
    if (label == "cGBD") return {Family::cgbd, 2};
    if (label == "GBD_I" || label == "GBDI") return {Family::gbd_in, 2};
    if (label == "GBD_O" || label == "GBDO") return {Family::gbd_out, 2};
    throw Error(Errc::bad_config, "unknown depth method '" + label + "'");
}

std::string DepthMethod::label() const {
    switch (family) {
        case Family::bd: return "BD" + std::to_string(j);
        case Family::gbd: return j == 2 ? "GBD" : "GBD" + std::to_string(j);
        case Family::cbd: return "cBD";
        case Family::cgbd: return "cGBD";
        case Family::gbd_in: return "GBD_I";
        case Family::gbd_out: return "GBD_O";
    }
    return "?";
}

std::vector<DepthMethod> all_methods() {
    using F = DepthMethod::Family;
    return {{F::bd, 2},  {F::bd, 3},    {F::cbd, 2},    {F::gbd, 2},
            {F::cgbd, 2}, {F::gbd_in, 2}, {F::gbd_out, 2}};
}

}  // namespace fdepth
