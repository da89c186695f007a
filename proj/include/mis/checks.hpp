#pragma once

#include <string>
#include <vector>

#include "mis/errors.hpp"

namespace mis {

// One named structural assertion, aggregated over a run. The first failing
// witness is kept so a violation can be reported concretely.
struct CheckEntry {
    std::string name;
    long long runs = 0;
    long long failures = 0;
    VertexSet first_witness;
    std::string first_detail;

    bool passed() const { return failures == 0; }
};

// Aggregates the proof-backed runtime assertions a solver performs. Solvers
// record both passes and failures; a failure certifies the input is outside
// the assumed graph class (or exposes a bug), and results are then flagged
// unverified instead of being dropped.
class CheckLog {
public:
    void record(const std::string& name, bool ok, const VertexSet& witness = {},
                const std::string& detail = {}) {
        CheckEntry& e = entry(name);
        ++e.runs;
        if (!ok) {
            ++e.failures;
            if (e.failures == 1) {
                e.first_witness = witness;
                e.first_detail = detail;
            }
        }
    }

    void merge(const CheckLog& other) {
        for (const CheckEntry& oe : other.entries_) {
            CheckEntry& e = entry(oe.name);
            e.runs += oe.runs;
            if (e.failures == 0 && oe.failures > 0) {
                e.first_witness = oe.first_witness;
                e.first_detail = oe.first_detail;
            }
            e.failures += oe.failures;
        }
    }

    bool all_passed() const {
        for (const CheckEntry& e : entries_)
            if (!e.passed()) return false;
        return true;
    }

    long long runs(const std::string& name) const {
        const CheckEntry* e = find(name);
        return e ? e->runs : 0;
    }

    long long failures(const std::string& name) const {
        const CheckEntry* e = find(name);
        return e ? e->failures : 0;
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }

private:
    CheckEntry& entry(const std::string& name) {
        for (CheckEntry& e : entries_)
            if (e.name == name) return e;
        entries_.push_back(CheckEntry{name, 0, 0, {}, {}});
        return entries_.back();
    }

    const CheckEntry* find(const std::string& name) const {
        for (const CheckEntry& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    std::vector<CheckEntry> entries_;
};

}  // namespace mis
