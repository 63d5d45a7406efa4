#include "painleve/sweep.hpp"

#include "painleve/errors.hpp"

#include <deque>
#include <exception>
#include <set>

namespace painleve {

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const ParseError&) {
        return 2;
    } catch (const UnsupportedExponent&) {
        return 2;
    } catch (const BudgetExceeded&) {
        return 4;
    } catch (const ConstraintError&) {
        return 3;
    } catch (const PoleError&) {
        return 3;
    } catch (const RegionError&) {
        return 3;
    } catch (...) {
        return 2;
    }
}

Json classify_line(std::string_view line, std::size_t line_number) {
    try {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) throw ParseError("empty line");
        line.remove_prefix(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) throw ParseError("expected '<family> <params>'");
        Family family = parse_family(line.substr(0, space));
        std::string_view rest = line.substr(space);
        rest.remove_prefix(rest.find_first_not_of(" \t"));
        return classification_json(classify(FamilyInstance::parse(family, rest)));
    } catch (const std::exception& e) {
        int code = exit_code_for_current_exception();
        return Json{{"line", line_number}, {"input", std::string(line)}, {"error", e.what()}, {"exit_code", code}};
    }
}

std::vector<Json> sweep_serial(const std::vector<std::string>& lines) {
    std::vector<Json> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(classify_line(lines[i], i + 1));
    return out;
}

std::vector<Json> sweep_parallel(const std::vector<std::string>& lines) {
    std::vector<Json> out(lines.size());
    const long n = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) out[i] = classify_line(lines[i], static_cast<std::size_t>(i) + 1);
    return out;
}

std::vector<Classification> classify_batch_serial(const std::vector<FamilyInstance>& batch) {
    std::vector<Classification> out;
    out.reserve(batch.size());
    for (const auto& inst : batch) out.push_back(classify(inst));
    return out;
}

std::vector<Classification> classify_batch_parallel(const std::vector<FamilyInstance>& batch) {
    std::vector<std::optional<Classification>> slots(batch.size());
    const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) slots[i] = classify(batch[i]);
    std::vector<Classification> out;
    out.reserve(batch.size());
    for (auto& c : slots) out.push_back(std::move(*c));
    return out;
}

std::vector<P6Result> p6_stratum_batch_serial(const std::vector<ParamVector>& batch) {
    std::vector<P6Result> out;
    out.reserve(batch.size());
    for (const auto& v : batch) out.push_back(p6_stratum(v));
    return out;
}

std::vector<P6Result> p6_stratum_batch_parallel(const std::vector<ParamVector>& batch) {
    std::vector<P6Result> out(batch.size());
    const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[i] = p6_stratum(batch[i]);
    return out;
}

bool same_class(const Classification& a, const Classification& b) {
    return a.stratum == b.stratum && a.morley_rank == b.morley_rank && a.morley_degree == b.morley_degree;
}

namespace {

std::size_t violations_for(Family family, const ParamVector& sample, int max_word_length) {
    const auto gens = orbit_generators(family);
    const Classification reference = classify(FamilyInstance(family, {sample.begin(), sample.end()}));
    std::size_t bad = 0;

    auto key = [](const ParamVector& v) {
        std::string k;
        for (const auto& z : v) k += to_string(z) + ";";
        return k;
    };
    std::set<std::string> seen{key(sample)};
    std::deque<std::pair<ParamVector, int>> frontier{{sample, 0}};
    while (!frontier.empty()) {
        auto [point, depth] = std::move(frontier.front());
        frontier.pop_front();
        if (depth >= max_word_length) continue;
        for (Generator g : gens) {
            ParamVector image = apply_generator({family, g}, point);
            if (!seen.insert(key(image)).second) continue;
            if (!same_class(reference, classify(FamilyInstance(family, {image.begin(), image.end()})))) ++bad;
            frontier.emplace_back(std::move(image), depth + 1);
        }
    }
    return bad;
}

}  // namespace

std::size_t invariance_violations_serial(Family family, const std::vector<ParamVector>& samples,
                                         int max_word_length) {
    std::size_t total = 0;
    for (const auto& s : samples) total += violations_for(family, s, max_word_length);
    return total;
}

std::size_t invariance_violations_parallel(Family family, const std::vector<ParamVector>& samples,
                                           int max_word_length) {
    std::size_t total = 0;
    const long n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
    for (long i = 0; i < n; ++i) total += violations_for(family, samples[i], max_word_length);
    return total;
}

}  // namespace painleve
