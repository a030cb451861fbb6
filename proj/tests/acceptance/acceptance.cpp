// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ontomatch/alignment_io.hpp"
#include "ontomatch/assignment.hpp"
#include "ontomatch/error.hpp"
#include "ontomatch/evaluation.hpp"
#include "ontomatch/ontology_ingest.hpp"
#include "ontomatch/pipeline.hpp"
#include "ontomatch/similarity.hpp"
#include "support/oracles.hpp"
#include "support/synthetic_ontology.hpp"

using namespace ontomatch;
namespace fs = std::filesystem;

namespace {

constexpr int kAssignmentTrials = 1000;
constexpr std::size_t kMaxSide = 6;
constexpr std::size_t kMaxLatticeLength = 5;
constexpr int kMetricPairs = 10000;
constexpr double kMetricTolerance = 1e-9;
constexpr double kSelfMatchThreshold = 0.5;
constexpr double kSelfMatchBudgetSeconds = 60.0;
constexpr std::size_t kHeavyMinEntities = 500;
constexpr int kRoundTrips = 1000;
constexpr double kMeasureTolerance = 1e-6;
constexpr double kArithmeticTolerance = 1e-4;
constexpr int kHarmonicPairs = 10000;
constexpr double kPluralThreshold = 0.5;
constexpr double kLowThreshold = 0.3;
constexpr double kHighThreshold = 0.8;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

fs::path fixture(const char* name) { return fs::path(ONTOMATCH_FIXTURE_DIR) / name; }

std::string pairs_text(const Assignment& a) {
    std::ostringstream out;
    for (const auto& [r, c] : a.pairs) out << '(' << r << ',' << c << ')';
    out << " w=" << a.total_weight;
    return out.str();
}

Outcome assignment_oracle() {
    Outcome o;
    std::mt19937 rng(20130501);
    std::uniform_int_distribution<std::size_t> side(1, kMaxSide);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> grid(0, 4);
    for (int trial = 0; trial < kAssignmentTrials; ++trial) {
        const std::size_t m = side(rng), n = side(rng);
        Matrix<double> values(m, n, 0.0);
        // Every third matrix is drawn from a coarse grid to force ties.
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) values(i, j) = trial % 3 == 2 ? grid(rng) / 4.0 : unit(rng);
        }
        const Assignment fast = kuhn_munkres(values);
        const Assignment slow = test_support::brute_force_assignment(values);
        if (fast.total_weight != slow.total_weight || fast.pairs != slow.pairs) {
            o.fail("trial " + std::to_string(trial) + ": " + pairs_text(fast) + " vs " + pairs_text(slow));
        }
    }
    if (o.pass) o.detail = std::to_string(kAssignmentTrials) + " matrices, weights and pairs identical";
    return o;
}

Outcome levenshtein_oracle() {
    Outcome o;
    std::vector<std::string> words{""};
    for (std::size_t begin = 0, len = 1; len <= kMaxLatticeLength; ++len) {
        const std::size_t end = words.size();
        for (std::size_t k = begin; k < end; ++k) {
            if (words[k].size() != len - 1) continue;
            for (char c : {'a', 'b', 'c'}) words.push_back(words[k] + c);
        }
        begin = end;
    }
    std::size_t checked = 0;
    for (const auto& x : words) {
        for (const auto& y : words) {
            if (levenshtein_edits(x, y) != test_support::lattice_edit_distance(x, y)) {
                o.fail("mismatch on \"" + x + "\" / \"" + y + "\"");
            }
            ++checked;
        }
    }
    if (levenshtein_edits("car", "cars") != 1) o.fail("car/cars is not one edit");
    if (o.pass) o.detail = std::to_string(checked) + " pairs agree, car/cars = 1 edit";
    return o;
}

std::string random_string(std::mt19937& rng) {
    static const std::vector<std::string> kAlphabet{"a", "b", "c", "d", "e", " ", "x", "y", "é", "ß", "z", "1"};
    std::uniform_int_distribution<int> length(0, 12);
    std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
    std::string s;
    for (int n = length(rng); n > 0; --n) s += kAlphabet[pick(rng)];
    return s;
}

Outcome metric_properties() {
    Outcome o;
    std::mt19937 rng(42);
    for (MetricId id : kAllMetrics) {
        const auto sim = metric_by_id(id, {});
        for (int k = 0; k < kMetricPairs; ++k) {
            const std::string x = random_string(rng), y = random_string(rng);
            const double xy = sim(x, y), yx = sim(y, x);
            if (!(xy >= -kMetricTolerance && xy <= 1.0 + kMetricTolerance)) {
                o.fail(std::string(metric_name(id)) + " out of range on \"" + x + "\" / \"" + y + "\"");
            }
            if (std::abs(xy - yx) > kMetricTolerance) {
                o.fail(std::string(metric_name(id)) + " asymmetric on \"" + x + "\" / \"" + y + "\"");
            }
            if (std::abs(sim(x, x) - 1.0) > kMetricTolerance) {
                o.fail(std::string(metric_name(id)) + " sim(x,x) != 1 on \"" + x + "\"");
            }
        }
    }
    if (o.pass) o.detail = std::to_string(kMetricPairs) + " pairs per metric";
    return o;
}

Alignment identity_reference(const EntityGraph& g) {
    Alignment a;
    for (const Entity& e : g.entities()) a.cells.push_back({e.uri, e.uri, 1.0, "="});
    return a;
}

Outcome self_alignment(const fs::path& scratch) {
    Outcome o;
    const fs::path heavy = scratch / "heavyweight.owl";
    std::ofstream(heavy, std::ios::binary) << test_support::synthetic_owl({});

    std::set<FormatKind> formats;
    std::ostringstream timing;
    for (const fs::path& path : {fixture("vehicles.owl"), fixture("library.rdf"), fixture("catalog.xml"),
                                 fixture("people.owl"), heavy}) {
        const std::string text = read_file(path);
        formats.insert(detect_format(text));
        const EntityGraph g = parse_ontology(text);
        if (path == heavy && g.size() < kHeavyMinEntities) {
            o.fail("synthetic fixture has only " + std::to_string(g.size()) + " entities");
        }
        const auto start = std::chrono::steady_clock::now();
        for (MetricId id : kAllMetrics) {
            MatchConfig cfg;
            cfg.source = path;
            cfg.target = path;
            cfg.metric = id;
            cfg.threshold = kSelfMatchThreshold;
            std::ostringstream out, err;
            if (run_match(cfg, out, err) != kExitOk) {
                o.fail(path.filename().string() + ": " + err.str());
                continue;
            }
            const EvalReport r = evaluate(read_alignment(out.str()), identity_reference(g));
            if (r.precision != 1.0 || r.recall != 1.0 || r.f_measure != 1.0) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "%s/%s: P=%.6f R=%.6f F=%.6f", path.filename().c_str(),
                              metric_name(id), r.precision, r.recall, r.f_measure);
                o.fail(buf);
            }
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > kSelfMatchBudgetSeconds) o.fail(path.filename().string() + " took too long");
        if (path == heavy) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%zu-entity synthetic in %.2fs over all metrics", g.size(), seconds);
            timing << buf;
        }
    }
    if (formats.size() != 3) o.fail("fixtures do not cover every input format");
    if (o.pass) o.detail = timing.str();
    return o;
}

Outcome alignment_conformance() {
    Outcome o;
    const auto concept_at = [](std::string uri) {
        return Entity{EntityId{0}, std::move(uri), "x", EntityKind::Concept};
    };
    const std::string o1 = "http://www.w3.org/2001/XMLSchema/O1.rdf";
    const std::string o2 = "http://www.w3.org/2001/XMLSchema/O2.rdf";
    std::vector<Mapping> mappings;
    for (const char* name : {"Academic", "Book"}) {
        mappings.push_back(Mapping{concept_at(o1 + "#" + name), concept_at(o2 + "#" + name),
                                   Relation::Equivalence, MetricId::Levenshtein, 1.0});
    }
    const Alignment back = read_alignment(write_alignment(mappings, o1, o2));
    const AlignmentHeader& h = back.header;
    if (h.xml != "yes" || h.level != "0" || h.type != "11" || h.method != "Automated generated" || h.uri1 != o1 ||
        h.uri2 != o2) {
        o.fail("header fields differ");
    }
    if (back.cells.size() != 2) {
        o.fail("expected two cells");
    } else {
        for (std::size_t k = 0; k < 2; ++k) {
            const auto& c = back.cells[k];
            if (c.entity1 != mappings[k].source.uri || c.entity2 != mappings[k].target.uri || c.measure != 1.0 ||
                c.relation != "=") {
                o.fail("cell " + std::to_string(k) + " differs");
            }
        }
    }
    const Alignment reference = read_alignment(read_file(fixture("fig2_alignment.rdf")));
    if (back.cells != reference.cells || back.header != reference.header) o.fail("differs from reference document");

    std::mt19937 rng(2);
    std::uniform_int_distribution<int> count(0, 20), micro(0, 1000000), pick(0, 3);
    const char* symbols[] = {"=", "<", ">", "%"};
    for (int trial = 0; trial < kRoundTrips; ++trial) {
        Alignment a;
        a.header.uri1 = "http://ex.org/a" + std::to_string(trial);
        a.header.uri2 = "http://ex.org/b&c" + std::to_string(trial);
        for (int k = count(rng); k > 0; --k) {
            a.cells.push_back({a.header.uri1 + "#e" + std::to_string(k), a.header.uri2 + "#f<" + std::to_string(k),
                               micro(rng) / 1e6, symbols[pick(rng)]});
        }
        const Alignment r = read_alignment(write_alignment(a));
        bool same = r.header == a.header && r.cells.size() == a.cells.size();
        for (std::size_t k = 0; same && k < a.cells.size(); ++k) {
            same = r.cells[k].entity1 == a.cells[k].entity1 && r.cells[k].entity2 == a.cells[k].entity2 &&
                   r.cells[k].relation == a.cells[k].relation &&
                   std::abs(r.cells[k].measure - a.cells[k].measure) <= kMeasureTolerance;
        }
        if (!same) o.fail("round trip " + std::to_string(trial) + " differs");
    }
    if (o.pass) o.detail = "two-cell document matches, " + std::to_string(kRoundTrips) + " round trips";
    return o;
}

Outcome evaluation_arithmetic() {
    Outcome o;
    const double p = precision(3, 4), r = recall(3, 5), f = f_measure(p, r);
    if (std::abs(p - 0.75) > kArithmeticTolerance || std::abs(r - 0.6) > kArithmeticTolerance ||
        std::abs(f - 0.6667) > kArithmeticTolerance) {
        o.fail("3/4/5 gives wrong P, R or F");
    }
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < kHarmonicPairs; ++k) {
        const double a = unit(rng), b = unit(rng);
        if (a + b <= 0.0) continue;
        const double h = f_measure(a, b);
        if (h < std::min(a, b) || h > std::max(a, b)) o.fail("harmonic bound broken");
    }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "P=%.4f R=%.4f F=%.4f, bound holds on %d pairs", p, r, f, kHarmonicPairs);
        o.detail = buf;
    }
    return o;
}

double plural_f(MetricId metric) {
    const EntityGraph source = load_ontology(fixture("people.owl"));
    const EntityGraph target = load_ontology(fixture("people_plural.owl"));
    const auto outcome = match_graphs(source, target, metric, {2}, kPluralThreshold);
    const Alignment system = to_alignment(outcome.mappings, source.ontology_uri(), target.ontology_uri());
    return evaluate(system, read_alignment(read_file(fixture("people_reference.rdf")))).f_measure;
}

Outcome plural_ordering() {
    Outcome o;
    const double lev = plural_f(MetricId::Levenshtein), qg = plural_f(MetricId::Qgrams);
    char buf[96];
    std::snprintf(buf, sizeof buf, "levenshtein F=%.5f, qgrams F=%.5f", lev, qg);
    o.detail = buf;
    if (!(lev > qg)) o.fail(buf);
    return o;
}

std::set<std::pair<std::string, std::string>> mapping_set(const EntityGraph& s, const EntityGraph& t, MetricId id,
                                                         double threshold) {
    std::set<std::pair<std::string, std::string>> out;
    for (const Mapping& m : match_graphs(s, t, id, {}, threshold).mappings) out.emplace(m.source.uri, m.target.uri);
    return out;
}

Outcome threshold_monotonicity() {
    Outcome o;
    const std::vector<std::pair<const char*, const char*>> pairs{{"people.owl", "people_plural.owl"},
                                                                 {"car.owl", "cars.owl"},
                                                                 {"vehicles.owl", "catalog.xml"},
                                                                 {"vehicles.owl", "library.rdf"},
                                                                 {"library.rdf", "people_plural.owl"}};
    std::size_t checked = 0;
    for (const auto& [a, b] : pairs) {
        const EntityGraph s = load_ontology(fixture(a)), t = load_ontology(fixture(b));
        for (MetricId id : kAllMetrics) {
            const auto high = mapping_set(s, t, id, kHighThreshold);
            const auto low = mapping_set(s, t, id, kLowThreshold);
            if (!std::includes(low.begin(), low.end(), high.begin(), high.end())) {
                o.fail(std::string(a) + " vs " + b + " under " + metric_name(id));
            }
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " pair/metric combinations";
    return o;
}

} // namespace

int main() {
    const fs::path scratch = fs::temp_directory_path() / ("ontomatch_acceptance_" + std::to_string(::time(nullptr)));
    fs::create_directories(scratch);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"assignment matches brute force", assignment_oracle},
        {"levenshtein matches edit lattice", levenshtein_oracle},
        {"metric range, symmetry, identity", metric_properties},
        {"self-alignment identity", [&] { return self_alignment(scratch); }},
        {"alignment format conformance", alignment_conformance},
        {"evaluation arithmetic", evaluation_arithmetic},
        {"levenshtein beats qgrams on plurals", plural_ordering},
        {"threshold monotonicity", threshold_monotonicity},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    fs::remove_all(scratch);
    return failures == 0 ? 0 : 1;
}
