#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "animl/diag.hpp"

// Typed in-memory form of a parsed AnIML document. Series payloads are held
// as byte spans into the source and decoded on demand, so the AST stays small
// regardless of how much numeric data a file carries.
namespace animl {

enum class ValueType { Int32, Int64, Float32, Float64, String, Boolean, DateTime, Binary };

inline const char* to_string(ValueType t) {
    switch (t) {
        case ValueType::Int32: return "Int32";
        case ValueType::Int64: return "Int64";
        case ValueType::Float32: return "Float32";
        case ValueType::Float64: return "Float64";
        case ValueType::String: return "String";
        case ValueType::Boolean: return "Boolean";
        case ValueType::DateTime: return "DateTime";
        case ValueType::Binary: return "Binary";
    }
    return "?";
}

inline std::optional<ValueType> value_type_from_name(std::string_view name) {
    if (name == "Int32") return ValueType::Int32;
    if (name == "Int64") return ValueType::Int64;
    if (name == "Float32") return ValueType::Float32;
    if (name == "Float64") return ValueType::Float64;
    if (name == "String") return ValueType::String;
    if (name == "Boolean") return ValueType::Boolean;
    if (name == "DateTime") return ValueType::DateTime;
    if (name == "Binary") return ValueType::Binary;
    return std::nullopt;
}

/// Value-element tag -> type, following the AnIML core convention
/// (I/L/F/D/S plus spelled-out tags).
inline std::optional<ValueType> value_type_from_tag(std::string_view tag) {
    if (tag == "I") return ValueType::Int32;
    if (tag == "L") return ValueType::Int64;
    if (tag == "F") return ValueType::Float32;
    if (tag == "D") return ValueType::Float64;
    if (tag == "S") return ValueType::String;
    if (tag == "Boolean") return ValueType::Boolean;
    if (tag == "DateTime") return ValueType::DateTime;
    if (tag == "Binary") return ValueType::Binary;
    return std::nullopt;
}

struct ByteSpan {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    bool empty() const { return end <= begin; }
    std::uint64_t size() const { return end - begin; }
};

struct UnitDef {
    std::string label;
    std::string quantity;
    std::optional<double> factor;
    std::optional<long long> exponent;
};

struct ParameterData {
    std::string name;
    ValueType value_type = ValueType::String;
    std::string lexical;
    std::optional<UnitDef> unit;
};

enum class Dependency { Independent, Dependent };
enum class ValueSetKind { Individual, AutoIncremented, Encoded };

struct SeriesData {
    std::string id;
    std::string name;
    Dependency dependency = Dependency::Dependent;
    ValueType value_type = ValueType::Float64;
    std::string plot_scale;  // "", "linear", "log", "inverse"
    ValueSetKind kind = ValueSetKind::Individual;
    ByteSpan payload;              // Individual/Encoded payload region in the source
    std::string auto_start;        // AutoIncremented: lexical start value
    std::string auto_increment;    // AutoIncremented: lexical increment
    std::size_t set_length = 0;    // copied from the owning SeriesSet
};

struct SeriesSetData {
    std::string name;
    std::size_t length = 0;
    std::vector<SeriesData> series;
};

struct CategoryData {
    std::string name;
    std::vector<ParameterData> parameters;
    std::vector<SeriesSetData> series_sets;
    std::vector<CategoryData> subcategories;
};

struct SampleData {
    std::string id;
    std::string name;
    bool is_container = false;
    std::string container_type;          // this sample's own declared type
    std::string parent_container_id;     // raw containerID attribute, if any
    // (child sample id, containment type) pairs, populated on the container.
    std::vector<std::pair<std::string, std::string>> contained;
    std::vector<CategoryData> categories;
};

enum class AgentKind { Human, Software, Hardware };
enum class AgentRole { None, Author, Operator, Other };

struct AgentData {
    AgentKind kind = AgentKind::Human;
    std::string name;
    AgentRole role = AgentRole::None;
    // Only the group matching `kind` is populated by the parser.
    std::string phone, email;                                   // human
    std::string operating_system, software_version;             // software
    std::string manufacturer, serial_number, firmware_version;  // hardware
};

enum class TargetKind { Sample, Step, DataPoint };
enum class DataPurpose { None, Produced, Consumed };

struct RawReference {
    std::string target_id;
    TargetKind target_kind = TargetKind::Sample;
    std::string role;
    DataPurpose purpose = DataPurpose::None;
    std::optional<long long> start_index;
    std::optional<long long> end_index;
};

enum class SubjectKind { SampleSet, Experiment, Series };

struct RawReferenceSet {
    SubjectKind subject_kind = SubjectKind::SampleSet;
    std::string subject_id;  // series id for Series-scoped sets; empty otherwise
    std::vector<RawReference> members;
};

struct MethodData {
    std::string name;
    std::vector<AgentData> agents;
    std::vector<CategoryData> categories;
};

struct InfrastructureData {
    bool present = false;
    std::vector<RawReference> sample_refs;
    std::vector<RawReference> step_refs;
    std::string timestamp;
};

struct ResultData {
    std::string name;
    std::vector<CategoryData> categories;
    std::vector<SeriesSetData> series_sets;
    std::vector<RawReferenceSet> ref_sets;
};

struct TechniqueRef {
    std::string uri;
    std::string name;
    std::string version;
};

struct ExperimentStepData {
    std::string id;
    std::string name;
    std::optional<TechniqueRef> technique;
    std::optional<MethodData> method;
    InfrastructureData infrastructure;
    std::vector<ResultData> results;
    std::vector<RawReferenceSet> ref_sets;  // step-level reference sets
};

enum class ChangeAction { Creation, Deletion, Modification };

struct AuditEntryData {
    std::string timestamp;
    std::optional<AgentData> author;
    ChangeAction action = ChangeAction::Modification;
    std::vector<std::string> target_ids;
    std::string reason;
};

struct SignatureData {
    std::string signer_name;
    std::string timestamp;
    std::vector<std::string> target_ids;
};

/// Where the document bytes came from; spans are re-read from here when a
/// deferred payload is decoded.
struct SourceStash {
    std::string path;          // set when parsed from a file
    std::string inline_bytes;  // set when parsed from memory
    bool from_file = false;

    std::string read_span(ByteSpan span) const;
};

struct AnimlDocument {
    std::string doc_version;
    std::vector<SampleData> samples;
    std::vector<ExperimentStepData> steps;
    std::vector<AuditEntryData> audit_trail;
    std::vector<SignatureData> signatures;

    /// Every id attribute value seen, with multiplicity.
    std::map<std::string, int> id_registry;
    std::vector<Diagnostic> diagnostics;
    std::shared_ptr<const SourceStash> source;

    std::vector<std::string> duplicate_ids() const {
        std::vector<std::string> out;
        for (const auto& [id, count] : id_registry) {
            if (count > 1) out.push_back(id);
        }
        return out;
    }
};

}  // namespace animl
