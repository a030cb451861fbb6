#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontomatch/alignment_io.hpp"

namespace ontomatch {

struct EvalReport {
    std::size_t correct = 0;
    std::size_t system_total = 0;
    std::size_t reference_total = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

struct EvalOptions {
    /// Also require the relation symbols to agree.
    bool strict_relation = false;
};

/// Number of system cells whose (entity1, entity2) pair is in the reference.
std::size_t correct_mappings(const Alignment& system, const Alignment& reference, EvalOptions options = {});

/// correct / system_total; 0 for an empty system alignment.
double precision(std::size_t correct, std::size_t system_total);
/// correct / reference_total. Throws Error(EmptyReference) when reference_total is 0.
double recall(std::size_t correct, std::size_t reference_total);
/// Harmonic mean; 0 when p + r is 0.
double f_measure(double p, double r);

EvalReport evaluate(const Alignment& system, const Alignment& reference, EvalOptions options = {});

enum class WeightClass { Light, Heavy };
enum class Category { All, Light, Heavy };

struct OntologyReport {
    std::string ontology;
    WeightClass weight = WeightClass::Light;
    EvalReport report;
};

struct CategoryAverage {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

/// Unweighted means of the per-ontology P, R and F (F is averaged directly,
/// not recomputed from the mean P and R). Throws Error(EmptyCategory).
CategoryAverage category_average(const std::vector<OntologyReport>& reports, Category category);

/// Fixed-width table with P, R and F to five decimals.
std::string render_table(const std::vector<OntologyReport>& reports);

/// One line per report:
/// `ontology=<id> correct=<n> system=<n> reference=<n> precision=<p> recall=<r> f_measure=<f>`
std::string render_records(const std::vector<OntologyReport>& reports);

} // namespace ontomatch
