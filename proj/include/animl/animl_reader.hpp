#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <memory>
#include <sstream>
#include <utility>
#include <string>
#include <variant>
#include <vector>

#include "animl/ast.hpp"
#include "animl/base64.hpp"
#include "animl/diag.hpp"
#include "animl/xml/reader.hpp"

namespace animl {

inline std::string SourceStash::read_span(ByteSpan span) const {
    if (span.empty()) return {};
    if (!from_file) {
        if (span.end > inline_bytes.size()) return {};
        return inline_bytes.substr(span.begin, span.size());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot reopen source '" + path + "' to decode a deferred payload");
    }
    in.seekg(static_cast<std::streamoff>(span.begin));
    std::string out(span.size(), '\0');
    in.read(out.data(), static_cast<std::streamsize>(out.size()));
    out.resize(static_cast<std::size_t>(in.gcount()));
    return out;
}

namespace detail {

inline bool parse_integer(std::string_view s, long long* out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc{} && ptr == last && !s.empty();
}

inline bool parse_double(std::string_view s, double* out) {
    if (s.empty()) return false;
    std::string buf(s);
    char* end = nullptr;
    *out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

inline std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

/// Walks the AnIML core-schema subset into an AnimlDocument. Series payloads
/// (IndividualValueSet / EncodedValueSet bodies) are streamed past, not
/// buffered; only their byte spans are kept.
class AnimlParser {
public:
    AnimlParser(std::istream& in, std::shared_ptr<const SourceStash> stash)
        : r_(in), stash_(std::move(stash)) {}

    AnimlDocument run() {
        doc_.source = stash_;
        if (r_.next() != xml::Reader::Event::StartElement) {
            throw ParseError("no root element", r_.line(), r_.column());
        }
        if (r_.name() != "AnIML") {
            throw ParseError("expected AnIML root element, found '" + r_.name() + "'",
                             r_.line(), r_.column());
        }
        doc_.doc_version = attr_or("version", "");
        children([&](const std::string& name) {
            if (name == "SampleSet") {
                children([&](const std::string& n) {
                    if (n == "Sample") sample();
                    else unknown(n);
                });
            } else if (name == "ExperimentStepSet") {
                children([&](const std::string& n) {
                    if (n == "ExperimentStep") step();
                    else unknown(n);
                });
            } else if (name == "AuditTrailEntrySet") {
                children([&](const std::string& n) {
                    if (n == "AuditTrailEntry") audit_entry();
                    else unknown(n);
                });
            } else if (name == "SignatureSet") {
                children([&](const std::string& n) {
                    if (n == "Signature") signature();
                    else unknown(n);
                });
            } else {
                unknown(name);
            }
        });
        resolve_containers();
        return std::move(doc_);
    }

private:
    using Event = xml::Reader::Event;

    std::string attr_or(std::string_view name, std::string fallback) {
        auto v = r_.attribute(name);
        return v ? *v : std::move(fallback);
    }

    void warn(std::string message) {
        doc_.diagnostics.push_back(
            {Diagnostic::Severity::Warning, std::move(message), r_.line(), r_.column()});
    }

    void error(std::string message) {
        doc_.diagnostics.push_back(
            {Diagnostic::Severity::Error, std::move(message), r_.line(), r_.column()});
    }

    void unknown(const std::string& name) {
        warn("unknown element '" + name + "' skipped");
        r_.skip_element();
    }

    void register_id(const std::string& value) {
        if (!value.empty()) ++doc_.id_registry[value];
    }

    void require_id(const std::string& value, const char* element) {
        if (value.empty()) {
            error(std::string("missing required id on <") + element + ">");
        }
    }

    /// Runs fn for every child element of the current element; fn must fully
    /// consume each child. Character data between children is streamed past.
    template <typename Fn>
    void children(Fn&& fn) {
        while (true) {
            Event ev = r_.next();
            if (ev == Event::Text) continue;  // discarded by the next call
            if (ev == Event::EndElement || ev == Event::Eof) return;
            fn(r_.name());
        }
    }

    /// Text content of the current element; unexpected child elements are
    /// skipped with a warning.
    std::string element_text() {
        std::string out;
        while (true) {
            Event ev = r_.next();
            if (ev == Event::Text) {
                out += r_.text();
            } else if (ev == Event::StartElement) {
                warn("unexpected element '" + r_.name() + "' inside text content");
                r_.skip_element();
            } else {
                return out;
            }
        }
    }

    /// Consumes the current element's body, returning the byte span of its
    /// content. Nothing inside is retained.
    ByteSpan capture_span() {
        ByteSpan span;
        span.begin = r_.offset();
        std::size_t target = r_.depth() - 1;
        while (true) {
            Event ev = r_.next();
            if (ev == Event::EndElement && r_.depth() == target) {
                span.end = std::max(r_.tag_begin(), span.begin);
                return span;
            }
            if (ev == Event::Eof) return span;
        }
    }

    // --- samples ---

    void sample() {
        SampleData s;
        s.id = attr_or("sampleID", "");
        s.name = attr_or("name", "");
        s.container_type = attr_or("containerType", "");
        s.parent_container_id = attr_or("containerID", "");
        require_id(s.id, "Sample");
        register_id(s.id);
        if (!s.container_type.empty()) s.is_container = true;
        children([&](const std::string& n) {
            if (n == "Category") s.categories.push_back(category());
            else unknown(n);
        });
        doc_.samples.push_back(std::move(s));
    }

    void resolve_containers() {
        for (const SampleData& child : doc_.samples) {
            if (child.parent_container_id.empty()) continue;
            SampleData* parent = nullptr;
            for (SampleData& candidate : doc_.samples) {
                if (candidate.id == child.parent_container_id) {
                    parent = &candidate;
                    break;
                }
            }
            if (!parent) {
                doc_.diagnostics.push_back({Diagnostic::Severity::Warning,
                                            "containerID '" + child.parent_container_id +
                                                "' does not match any sample",
                                            0, 0});
                continue;
            }
            parent->is_container = true;
            parent->contained.emplace_back(
                child.id, parent->container_type.empty() ? "Simple" : parent->container_type);
        }
    }

    // --- categories, parameters, series ---

    CategoryData category() {
        CategoryData c;
        c.name = attr_or("name", "");
        children([&](const std::string& n) {
            if (n == "Category") c.subcategories.push_back(category());
            else if (n == "Parameter") c.parameters.push_back(parameter());
            else if (n == "SeriesSet") c.series_sets.push_back(series_set());
            else unknown(n);
        });
        return c;
    }

    ParameterData parameter() {
        ParameterData p;
        p.name = attr_or("name", "");
        bool have_value = false;
        children([&](const std::string& n) {
            if (auto vt = value_type_from_tag(n)) {
                if (have_value) {
                    warn("parameter '" + p.name + "' has more than one value; extra ignored");
                    r_.skip_element();
                    return;
                }
                have_value = true;
                p.value_type = *vt;
                p.lexical = element_text();
                std::string problem;
                if (!lexical_ok(p.lexical, p.value_type, &problem)) {
                    error("parameter '" + p.name + "': " + problem);
                }
            } else if (n == "Unit") {
                p.unit = unit();
            } else {
                unknown(n);
            }
        });
        if (!have_value) {
            warn("parameter '" + p.name + "' has no value element");
        }
        return p;
    }

    UnitDef unit() {
        UnitDef u;
        u.label = attr_or("label", "");
        u.quantity = attr_or("quantity", "");
        children([&](const std::string& n) {
            if (n == "SIUnit") {
                if (auto f = r_.attribute("factor")) {
                    double v = 0;
                    if (parse_double(*f, &v)) u.factor = v;
                }
                if (auto e = r_.attribute("exponent")) {
                    long long v = 0;
                    if (parse_integer(*e, &v)) u.exponent = v;
                }
                element_text();  // the SI base unit symbol; not modelled
            } else {
                unknown(n);
            }
        });
        return u;
    }

    SeriesSetData series_set() {
        SeriesSetData set;
        set.name = attr_or("name", "");
        long long length = 0;
        std::string raw = attr_or("length", "0");
        if (!parse_integer(raw, &length) || length < 0) {
            error("SeriesSet '" + set.name + "' has a bad length '" + raw + "'");
            length = 0;
        }
        set.length = static_cast<std::size_t>(length);
        children([&](const std::string& n) {
            if (n == "Series") set.series.push_back(series(set.length));
            else unknown(n);
        });
        return set;
    }

    SeriesData series(std::size_t set_length) {
        SeriesData s;
        s.set_length = set_length;
        s.id = attr_or("seriesID", "");
        s.name = attr_or("name", "");
        register_id(s.id);
        std::string dep = attr_or("dependency", "dependent");
        if (dep == "independent") {
            s.dependency = Dependency::Independent;
        } else if (dep == "dependent") {
            s.dependency = Dependency::Dependent;
        } else {
            warn("series '" + s.name + "': unknown dependency '" + dep + "'");
        }
        std::string vt = attr_or("seriesType", "Float64");
        if (auto parsed = value_type_from_name(vt)) {
            s.value_type = *parsed;
        } else {
            warn("series '" + s.name + "': unknown seriesType '" + vt + "'");
        }
        s.plot_scale = attr_or("plotScale", "");
        if (!s.plot_scale.empty() && s.plot_scale != "linear" && s.plot_scale != "log" &&
            s.plot_scale != "inverse") {
            warn("series '" + s.name + "': unknown plotScale '" + s.plot_scale + "'");
            s.plot_scale.clear();
        }
        bool have_values = false;
        children([&](const std::string& n) {
            if (n == "IndividualValueSet") {
                if (std::exchange(have_values, true)) { r_.skip_element(); return; }
                s.kind = ValueSetKind::Individual;
                s.payload = capture_span();
            } else if (n == "EncodedValueSet") {
                if (std::exchange(have_values, true)) { r_.skip_element(); return; }
                s.kind = ValueSetKind::Encoded;
                s.payload = capture_span();
            } else if (n == "AutoIncrementedValueSet") {
                if (std::exchange(have_values, true)) { r_.skip_element(); return; }
                s.kind = ValueSetKind::AutoIncremented;
                auto_incremented(s);
            } else {
                unknown(n);
            }
        });
        if (!have_values) {
            warn("series '" + s.name + "' has no value set");
        }
        return s;
    }

    void auto_incremented(SeriesData& s) {
        children([&](const std::string& n) {
            if (n == "StartValue") {
                s.auto_start = wrapped_value();
            } else if (n == "Increment") {
                s.auto_increment = wrapped_value();
            } else {
                unknown(n);
            }
        });
    }

    /// Content of a single-value wrapper like <StartValue><F>1.5</F></StartValue>.
    std::string wrapped_value() {
        std::string lexical;
        bool seen = false;
        children([&](const std::string& n) {
            if (value_type_from_tag(n) && !seen) {
                seen = true;
                lexical = element_text();
            } else {
                unknown(n);
            }
        });
        return lexical;
    }

    // --- experiment steps ---

    void step() {
        ExperimentStepData s;
        s.id = attr_or("experimentStepID", "");
        s.name = attr_or("name", "");
        require_id(s.id, "ExperimentStep");
        register_id(s.id);
        children([&](const std::string& n) {
            if (n == "Technique") {
                TechniqueRef t;
                t.uri = attr_or("uri", "");
                t.name = attr_or("name", "");
                t.version = attr_or("version", "");
                s.technique = std::move(t);
                r_.skip_element();
            } else if (n == "Method") {
                s.method = method();
            } else if (n == "Infrastructure") {
                s.infrastructure = infrastructure();
            } else if (n == "Result") {
                s.results.push_back(result());
            } else if (n == "ExperimentDataReferenceSet") {
                data_reference_set(s.ref_sets);
            } else if (n == "SampleReferenceSet") {
                sample_reference_set(s.ref_sets);
            } else {
                unknown(n);
            }
        });
        doc_.steps.push_back(std::move(s));
    }

    MethodData method() {
        MethodData m;
        m.name = attr_or("name", "");
        children([&](const std::string& n) {
            if (n == "Author") m.agents.push_back(agent(AgentKind::Human, AgentRole::Author));
            else if (n == "Software") m.agents.push_back(agent(AgentKind::Software, AgentRole::None));
            else if (n == "Device") m.agents.push_back(agent(AgentKind::Hardware, AgentRole::None));
            else if (n == "Category") m.categories.push_back(category());
            else unknown(n);
        });
        return m;
    }

    AgentData agent(AgentKind kind, AgentRole default_role) {
        AgentData a;
        a.kind = kind;
        a.role = default_role;
        if (auto role = r_.attribute("role")) {
            std::string lowered = lowercase(*role);
            if (lowered == "author") a.role = AgentRole::Author;
            else if (lowered == "operator") a.role = AgentRole::Operator;
            else a.role = AgentRole::Other;
        }
        children([&](const std::string& n) {
            if (n == "Name") a.name = element_text();
            else if (kind == AgentKind::Human && n == "Email") a.email = element_text();
            else if (kind == AgentKind::Human && n == "Phone") a.phone = element_text();
            else if (kind == AgentKind::Software && n == "Version") a.software_version = element_text();
            else if (kind == AgentKind::Software && n == "OperatingSystem")
                a.operating_system = element_text();
            else if (kind == AgentKind::Hardware && n == "Manufacturer")
                a.manufacturer = element_text();
            else if (kind == AgentKind::Hardware && n == "SerialNumber")
                a.serial_number = element_text();
            else if (kind == AgentKind::Hardware && n == "FirmwareVersion")
                a.firmware_version = element_text();
            else unknown(n);
        });
        return a;
    }

    InfrastructureData infrastructure() {
        InfrastructureData inf;
        inf.present = true;
        children([&](const std::string& n) {
            if (n == "SampleReferenceSet") {
                children([&](const std::string& m) {
                    if (m == "SampleReference") {
                        inf.sample_refs.push_back(sample_reference());
                        r_.skip_element();
                    } else {
                        unknown(m);
                    }
                });
            } else if (n == "ExperimentDataReferenceSet") {
                children([&](const std::string& m) {
                    if (m == "ExperimentDataReference") {
                        RawReference ref;
                        if (data_reference(&ref)) {
                            if (ref.target_kind == TargetKind::Step) {
                                inf.step_refs.push_back(std::move(ref));
                            } else {
                                warn("series reference inside Infrastructure skipped");
                            }
                        }
                        r_.skip_element();
                    } else {
                        unknown(m);
                    }
                });
            } else if (n == "Timestamp") {
                inf.timestamp = element_text();
            } else {
                unknown(n);
            }
        });
        return inf;
    }

    ResultData result() {
        ResultData res;
        res.name = attr_or("name", "");
        children([&](const std::string& n) {
            if (n == "Category") res.categories.push_back(category());
            else if (n == "SeriesSet") res.series_sets.push_back(series_set());
            else if (n == "ExperimentDataReferenceSet") data_reference_set(res.ref_sets);
            else if (n == "SampleReferenceSet") sample_reference_set(res.ref_sets);
            else unknown(n);
        });
        return res;
    }

    // --- references ---

    RawReference sample_reference() {
        RawReference ref;
        ref.target_kind = TargetKind::Sample;
        ref.target_id = attr_or("sampleID", "");
        ref.role = attr_or("role", "");
        purpose_attr("samplePurpose", &ref);
        if (ref.target_id.empty()) error("SampleReference without sampleID");
        return ref;
    }

    void purpose_attr(std::string_view attr, RawReference* ref) {
        auto raw = r_.attribute(attr);
        if (!raw) return;
        std::string lowered = lowercase(*raw);
        if (lowered == "produced") ref->purpose = DataPurpose::Produced;
        else if (lowered == "consumed") ref->purpose = DataPurpose::Consumed;
        else warn("unknown purpose '" + *raw + "'");
    }

    /// Reads the attributes of an ExperimentDataReference. Returns false when
    /// the element lacks any usable target.
    bool data_reference(RawReference* ref) {
        ref->role = attr_or("role", "");
        purpose_attr("dataPurpose", ref);
        if (auto step_id = r_.attribute("experimentStepID")) {
            ref->target_kind = TargetKind::Step;
            ref->target_id = *step_id;
            return true;
        }
        if (auto series_id = r_.attribute("seriesID")) {
            ref->target_kind = TargetKind::DataPoint;
            ref->target_id = *series_id;
            if (auto s = r_.attribute("startIndex")) {
                long long v = 0;
                if (parse_integer(*s, &v)) ref->start_index = v;
                else error("bad startIndex '" + *s + "'");
            }
            if (auto e = r_.attribute("endIndex")) {
                long long v = 0;
                if (parse_integer(*e, &v)) ref->end_index = v;
                else error("bad endIndex '" + *e + "'");
            }
            if (ref->start_index && ref->end_index && *ref->start_index > *ref->end_index) {
                error("reference range with startIndex > endIndex");
            }
            return true;
        }
        error("ExperimentDataReference without experimentStepID or seriesID");
        return false;
    }

    /// Step- or result-level data reference set: step references anchor to
    /// the experiment; series-slice references anchor to their series, one
    /// set per distinct series.
    void data_reference_set(std::vector<RawReferenceSet>& out) {
        std::vector<RawReference> step_refs;
        std::vector<std::pair<std::string, std::vector<RawReference>>> by_series;
        children([&](const std::string& n) {
            if (n == "ExperimentDataReference") {
                RawReference ref;
                if (data_reference(&ref)) {
                    if (ref.target_kind == TargetKind::Step) {
                        step_refs.push_back(std::move(ref));
                    } else {
                        auto it = std::find_if(by_series.begin(), by_series.end(),
                                               [&](const auto& kv) {
                                                   return kv.first == ref.target_id;
                                               });
                        if (it == by_series.end()) {
                            by_series.push_back({ref.target_id, {}});
                            it = std::prev(by_series.end());
                        }
                        it->second.push_back(std::move(ref));
                    }
                }
                r_.skip_element();
            } else {
                unknown(n);
            }
        });
        if (!step_refs.empty()) {
            out.push_back({SubjectKind::Experiment, "", std::move(step_refs)});
        }
        for (auto& [series_id, refs] : by_series) {
            out.push_back({SubjectKind::Series, series_id, std::move(refs)});
        }
    }

    void sample_reference_set(std::vector<RawReferenceSet>& out) {
        RawReferenceSet set;
        set.subject_kind = SubjectKind::SampleSet;
        children([&](const std::string& n) {
            if (n == "SampleReference") {
                set.members.push_back(sample_reference());
                r_.skip_element();
            } else {
                unknown(n);
            }
        });
        if (!set.members.empty()) out.push_back(std::move(set));
    }

    // --- audit trail and signatures ---

    void audit_entry() {
        AuditEntryData entry;
        children([&](const std::string& n) {
            if (n == "Timestamp") {
                entry.timestamp = element_text();
            } else if (n == "Author") {
                entry.author = agent(AgentKind::Human, AgentRole::Author);
            } else if (n == "Software") {
                entry.author = agent(AgentKind::Software, AgentRole::None);
            } else if (n == "Device") {
                entry.author = agent(AgentKind::Hardware, AgentRole::None);
            } else if (n == "Action") {
                std::string raw = lowercase(element_text());
                if (raw == "created" || raw == "creation" || raw == "create") {
                    entry.action = ChangeAction::Creation;
                } else if (raw == "modified" || raw == "modification" || raw == "modify") {
                    entry.action = ChangeAction::Modification;
                } else if (raw == "deleted" || raw == "deletion" || raw == "delete" ||
                           raw == "removed") {
                    entry.action = ChangeAction::Deletion;
                } else {
                    warn("unknown audit action '" + raw + "', recorded as modification");
                }
            } else if (n == "Reason") {
                entry.reason = element_text();
            } else if (n == "Reference") {
                std::string item = attr_or("itemID", "");
                if (!item.empty()) entry.target_ids.push_back(item);
                r_.skip_element();
            } else {
                unknown(n);
            }
        });
        doc_.audit_trail.push_back(std::move(entry));
    }

    void signature() {
        SignatureData sig;
        sig.signer_name = attr_or("name", "");
        sig.timestamp = attr_or("timestamp", "");
        children([&](const std::string& n) {
            if (n == "Reference") {
                std::string item = attr_or("itemID", "");
                if (!item.empty()) sig.target_ids.push_back(item);
                r_.skip_element();
            } else {
                unknown(n);
            }
        });
        doc_.signatures.push_back(std::move(sig));
    }

    // --- scalar parsing ---

    static bool lexical_ok(const std::string& lexical, ValueType t, std::string* problem) {
        long long i = 0;
        double d = 0;
        switch (t) {
            case ValueType::Int32:
                if (!parse_integer(lexical, &i) || i < INT32_MIN || i > INT32_MAX) {
                    *problem = "'" + lexical + "' is not an Int32";
                    return false;
                }
                return true;
            case ValueType::Int64:
                if (!parse_integer(lexical, &i)) {
                    *problem = "'" + lexical + "' is not an Int64";
                    return false;
                }
                return true;
            case ValueType::Float32:
            case ValueType::Float64:
                if (!parse_double(lexical, &d)) {
                    *problem = "'" + lexical + "' is not a float";
                    return false;
                }
                return true;
            case ValueType::Boolean:
                if (lexical != "true" && lexical != "false" && lexical != "1" && lexical != "0") {
                    *problem = "'" + lexical + "' is not a boolean";
                    return false;
                }
                return true;
            case ValueType::Binary:
                if (!base64_decode(lexical)) {
                    *problem = "bad base64 payload";
                    return false;
                }
                return true;
            case ValueType::String:
            case ValueType::DateTime:
                return true;
        }
        return true;
    }

    xml::Reader r_;
    std::shared_ptr<const SourceStash> stash_;
    AnimlDocument doc_;
};

}  // namespace detail

inline AnimlDocument parse_animl(std::istream& in,
                                 std::shared_ptr<const SourceStash> stash = nullptr) {
    detail::AnimlParser parser(in, std::move(stash));
    return parser.run();
}

/// Parses from a file; deferred payloads are re-read from `path` on decode.
inline AnimlDocument parse_animl_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    auto stash = std::make_shared<SourceStash>();
    stash->path = path;
    stash->from_file = true;
    return parse_animl(in, std::move(stash));
}

/// Parses from memory; the input is retained for deferred payload decoding.
inline AnimlDocument parse_animl_string(std::string xml) {
    auto stash = std::make_shared<SourceStash>();
    stash->inline_bytes = std::move(xml);
    stash->from_file = false;
    std::istringstream in(stash->inline_bytes);
    return parse_animl(in, std::move(stash));
}

// --- deferred series decoding ---

using SeriesValue = std::variant<std::int32_t, std::int64_t, float, double, bool, std::string>;

namespace detail {

inline SeriesValue parse_series_value(const std::string& lexical, ValueType t,
                                      std::size_t index) {
    auto fail = [&](const char* what) -> ParseError {
        return ParseError("series value at index " + std::to_string(index) + ": '" + lexical +
                          "' " + what);
    };
    long long i = 0;
    double d = 0;
    switch (t) {
        case ValueType::Int32:
            if (!parse_integer(lexical, &i) || i < INT32_MIN || i > INT32_MAX) {
                throw fail("is not an Int32");
            }
            return static_cast<std::int32_t>(i);
        case ValueType::Int64:
            if (!parse_integer(lexical, &i)) throw fail("is not an Int64");
            return static_cast<std::int64_t>(i);
        case ValueType::Float32:
            if (!parse_double(lexical, &d)) throw fail("is not a Float32");
            return static_cast<float>(d);
        case ValueType::Float64:
            if (!parse_double(lexical, &d)) throw fail("is not a Float64");
            return d;
        case ValueType::Boolean:
            if (lexical == "true" || lexical == "1") return true;
            if (lexical == "false" || lexical == "0") return false;
            throw fail("is not a Boolean");
        case ValueType::String:
        case ValueType::DateTime:
            return lexical;
        case ValueType::Binary: {
            auto bytes = base64_decode(lexical);
            if (!bytes) throw fail("is not base64");
            return *bytes;
        }
    }
    return lexical;
}

template <typename T>
inline void unpack_little_endian(const std::string& bytes, std::vector<SeriesValue>* out) {
    for (std::size_t i = 0; i + sizeof(T) <= bytes.size(); i += sizeof(T)) {
        T v;
        std::memcpy(&v, bytes.data() + i, sizeof(T));
        out->push_back(v);  // this toolkit targets little-endian hosts
    }
}

}  // namespace detail

/// Materializes the typed values of a series: individual values parsed per
/// the declared type, auto-increments expanded to start + k*increment, and
/// base64 chunks unpacked as little-endian numbers of the declared width.
inline std::vector<SeriesValue> decode_series_values(const AnimlDocument& doc,
                                                     const SeriesData& series) {
    std::vector<SeriesValue> out;
    switch (series.kind) {
        case ValueSetKind::Individual: {
            if (!doc.source) throw ParseError("document has no source to decode from");
            std::string payload = doc.source->read_span(series.payload);
            std::istringstream in("<Values>" + payload + "</Values>");
            xml::Reader r(in);
            if (r.next() != xml::Reader::Event::StartElement) {
                throw ParseError("corrupt series payload");
            }
            std::size_t index = 0;
            while (true) {
                auto ev = r.next();
                if (ev == xml::Reader::Event::Eof) break;
                if (ev == xml::Reader::Event::EndElement && r.depth() == 0) break;
                if (ev != xml::Reader::Event::StartElement) continue;
                std::string lexical;
                while (true) {
                    auto inner = r.next();
                    if (inner == xml::Reader::Event::Text) lexical += r.text();
                    else break;  // EndElement of the value element
                }
                out.push_back(detail::parse_series_value(lexical, series.value_type, index));
                ++index;
            }
            break;
        }
        case ValueSetKind::AutoIncremented: {
            if (series.value_type == ValueType::Int32 || series.value_type == ValueType::Int64) {
                long long start = 0, inc = 0;
                if (!detail::parse_integer(series.auto_start, &start)) {
                    throw ParseError("bad auto-increment start '" + series.auto_start + "'");
                }
                if (!detail::parse_integer(series.auto_increment, &inc)) {
                    throw ParseError("bad auto-increment step '" + series.auto_increment + "'");
                }
                for (std::size_t k = 0; k < series.set_length; ++k) {
                    long long v = start + static_cast<long long>(k) * inc;
                    if (series.value_type == ValueType::Int32) {
                        out.push_back(static_cast<std::int32_t>(v));
                    } else {
                        out.push_back(static_cast<std::int64_t>(v));
                    }
                }
            } else if (series.value_type == ValueType::Float32 ||
                       series.value_type == ValueType::Float64) {
                double start = 0, inc = 0;
                if (!detail::parse_double(series.auto_start, &start)) {
                    throw ParseError("bad auto-increment start '" + series.auto_start + "'");
                }
                if (!detail::parse_double(series.auto_increment, &inc)) {
                    throw ParseError("bad auto-increment step '" + series.auto_increment + "'");
                }
                for (std::size_t k = 0; k < series.set_length; ++k) {
                    double v = start + static_cast<double>(k) * inc;
                    if (series.value_type == ValueType::Float32) {
                        out.push_back(static_cast<float>(v));
                    } else {
                        out.push_back(v);
                    }
                }
            } else {
                throw ParseError("auto-increment requires a numeric series type, got " +
                                 std::string(to_string(series.value_type)));
            }
            break;
        }
        case ValueSetKind::Encoded: {
            if (!doc.source) throw ParseError("document has no source to decode from");
            auto bytes = base64_decode(doc.source->read_span(series.payload));
            if (!bytes) throw ParseError("series payload is not valid base64");
            std::size_t width = 0;
            switch (series.value_type) {
                case ValueType::Int32: width = 4; break;
                case ValueType::Int64: width = 8; break;
                case ValueType::Float32: width = 4; break;
                case ValueType::Float64: width = 8; break;
                default:
                    throw ParseError("encoded value sets require a numeric series type, got " +
                                     std::string(to_string(series.value_type)));
            }
            if (bytes->size() % width != 0) {
                throw ParseError("encoded payload length " + std::to_string(bytes->size()) +
                                 " is not a multiple of the value width " +
                                 std::to_string(width));
            }
            switch (series.value_type) {
                case ValueType::Int32: detail::unpack_little_endian<std::int32_t>(*bytes, &out); break;
                case ValueType::Int64: detail::unpack_little_endian<std::int64_t>(*bytes, &out); break;
                case ValueType::Float32: detail::unpack_little_endian<float>(*bytes, &out); break;
                case ValueType::Float64: detail::unpack_little_endian<double>(*bytes, &out); break;
                default: break;
            }
            break;
        }
    }
    if (series.set_length > 0 && out.size() != series.set_length) {
        throw ParseError("series has " + std::to_string(out.size()) + " values but its set " +
                         "declares length " + std::to_string(series.set_length));
    }
    return out;
}

}  // namespace animl
