#pragma once

#include <iosfwd>
#include <string>

#include "fdepth/resample.hpp"
#include "fdepth/simulate.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

// Curve matrix: header "id,<t_1>,...,<t_V>", then one row per curve with a
// leading id column.
FunctionalSample read_curves(std::istream& in, const std::string& source_name);
FunctionalSample read_curves_file(const std::string& path);
void write_curves(std::ostream& out, const FunctionalSample& sample);

void write_labels(std::ostream& out, const LabeledSample& labeled);

// id,depth,rank (competition ranks: tied depths share a rank).
void write_depth_table(std::ostream& out, const FunctionalSample& sample,
                       const DepthVector& depths);

// id,depth,rank,flagged with the [n*alpha] least-deep curves flagged.
void write_screen_table(std::ostream& out, const FunctionalSample& sample,
                        const DepthVector& depths, size_t trim_count);

// Single estimated curve in the curve-matrix format.
void write_estimate(std::ostream& out, const Grid& grid, const Curve& estimate,
                    const std::string& id);

// Machine-readable study grid: method,M<id>_mean,M<id>_sd,...
void write_study_csv(std::ostream& out, const StudyReport& report);

// Aligned "mean (sd)" block shaped like the study grid, with a config header.
void write_study_text(std::ostream& out, const StudyReport& report);

// model,method,replication,ei,eai
void write_study_raw(std::ostream& out, const StudyReport& report);

// position,mean_rank,sd_rank for one method.
void write_agreement_table(std::ostream& out, const RankAgreementReport& report);

// repeat,spearman,spearman_deepest,spearman_least
void write_agreement_correlations(std::ostream& out, const RankAgreementReport& report);

}  // namespace fdepth
