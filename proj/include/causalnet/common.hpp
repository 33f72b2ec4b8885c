#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace causalnet {

using Label = std::string;
using PlaceId = std::string;
using TransId = std::string;

using EventSet = std::set<std::string>;
using Family = std::set<EventSet>;

// Absent keys count as zero; stored counts are always positive.
using Multiset = std::map<std::string, unsigned>;
using Marking = Multiset;
using State = Multiset;          // transitions fired
using Configuration = Multiset;  // labels of a state
using Trace = std::vector<Label>;

// Unordered pair, stored with first < second.
using Pair = std::pair<std::string, std::string>;
using PairSet = std::set<Pair>;
// Ordered pair (a, b) meaning a before b.
using Arrow = std::pair<std::string, std::string>;
using Relation = std::set<Arrow>;

Pair unordered(const std::string& a, const std::string& b);
bool contains(const PairSet& pairs, const std::string& a, const std::string& b);

EventSet support(const Multiset& m);
bool is_set(const Multiset& m);
Multiset as_multiset(const EventSet& s);

bool subset_of(const EventSet& small, const EventSet& big);
EventSet set_union(const EventSet& a, const EventSet& b);
EventSet set_intersection(const EventSet& a, const EventSet& b);
EventSet set_difference(const EventSet& a, const EventSet& b);

Relation transitive_closure(const Relation& r);

std::string join(const EventSet& s, std::string_view sep = ",");
std::string show(const EventSet& s);    // {a,b}
std::string show(const Multiset& m);    // {a,a,b}
std::string show(const Trace& t);

struct Bounds {
    std::size_t max_depth = 32;
    std::size_t max_sequences = 200000;

    // CAUSALNET_BOUNDS="depth,sequences"; missing or malformed means defaults.
    static Bounds from_env();
};

enum class ErrorCode {
    parse,
    invalid_model,
    unknown_id,
    not_enabled,
    bound_exceeded,
    not_single_execution,
    property_violation,
    not_occurrence_causal,
    not_plainly_caused,
    not_well_behaved,
    not_elementary,
    unfirable_event,
    retries_exhausted,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Check {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct ModelReport {
    std::string kind;
    std::vector<Check> checks;

    bool valid() const;
    bool passed(std::string_view name) const;  // unknown names count as failed
    const Check* find(std::string_view name) const;
    void add(std::string name, bool passed, std::string witness = {});
    std::string first_failure() const;
};

}  // namespace causalnet
