#pragma once

#include <set>
#include <string>
#include <string_view>

#include "animl/rdf/node.hpp"

// Every ontology term the toolkit emits or inspects, as named constants.
// Nothing outside this header builds term IRIs from strings.
namespace animl::vocab {

using rdf::Node;

inline Node aml(std::string_view local) {
    return Node::iri(std::string(rdf::ns::aml) + std::string(local));
}
inline Node odp(std::string_view local) {
    return Node::iri(std::string(rdf::ns::odp) + std::string(local));
}
inline Node xsd(std::string_view local) {
    return Node::iri(std::string(rdf::ns::xsd) + std::string(local));
}
inline Node rdf_term(std::string_view local) {
    return Node::iri(std::string(rdf::ns::rdf) + std::string(local));
}
inline Node skos(std::string_view local) {
    return Node::iri(std::string(rdf::ns::skos) + std::string(local));
}
inline Node owl(std::string_view local) {
    return Node::iri(std::string(rdf::ns::owl) + std::string(local));
}
inline Node shacl(std::string_view local) {
    return Node::iri(std::string(rdf::ns::shacl) + std::string(local));
}

inline const Node type = rdf_term("type");

// --- core module classes ---
inline const Node Document = aml("Document");
inline const Node Experiment = aml("Experiment");
inline const Node ExperimentStep = aml("ExperimentStep");
inline const Node SampleSet = aml("SampleSet");
inline const Node Sample = aml("Sample");
inline const Node Container = aml("Container");
inline const Node SampleInContainer = aml("SampleInContainer");
inline const Node Category = aml("Category");
inline const Node Parameter = aml("Parameter");
inline const Node SeriesSet = aml("SeriesSet");
inline const Node Series = aml("Series");
inline const Node DataPoint = aml("DataPoint");
inline const Node Method = aml("Method");
inline const Node Infrastructure = aml("Infrastructure");
inline const Node Result = aml("Result");
inline const Node Agent = aml("Agent");
inline const Node HumanAgent = aml("HumanAgent");
inline const Node SoftwareAgent = aml("SoftwareAgent");
inline const Node HardwareAgent = aml("HardwareAgent");
inline const Node Role = aml("Role");
inline const Node AuditTrail = aml("AuditTrail");
inline const Node AuditTrailEntry = aml("AuditTrailEntry");
inline const Node Change = aml("Change");
inline const Node SignableItem = aml("SignableItem");
inline const Node Signature = aml("Signature");
inline const Node SignatureSet = aml("SignatureSet");
inline const Node Unit = aml("Unit");

// --- technique module classes ---
inline const Node Technique = aml("Technique");
inline const Node Specification = aml("Specification");
inline const Node ParameterSpecification = aml("ParameterSpecification");
inline const Node SeriesSetSpecification = aml("SeriesSetSpecification");
inline const Node SeriesSpecification = aml("SeriesSpecification");
inline const Node DataPointSpecification = aml("DataPointSpecification");
inline const Node IndividualDataPointSpecification = aml("IndividualDataPointSpecification");
inline const Node AutoIncrementedDataPointSpecification =
    aml("AutoIncrementedDataPointSpecification");
inline const Node EncodedDataPointSpecification = aml("EncodedDataPointSpecification");
inline const Node AnimlReferenceSpecification = aml("AnimlReferenceSpecification");
inline const Node PlotScale = aml("PlotScale");
inline const Node EncodingType = aml("EncodingType");
inline const Node BinaryEncodingType = aml("BinaryEncodingType");

// --- reference pattern ---
inline const Node AnimlReference = aml("AnimlReference");
inline const Node AnimlReferenceSet = aml("AnimlReferenceSet");

// --- object properties ---
inline const Node hasExperiment = aml("hasExperiment");
inline const Node hasSampleSet = aml("hasSampleSet");
inline const Node hasAuditTrail = aml("hasAuditTrail");
inline const Node hasSignatureSet = aml("hasSignatureSet");
inline const Node hasMember = odp("hasMember");
inline const Node directlyPrecedes = aml("directlyPrecedes");
inline const Node directlyFollows = aml("directlyFollows");
inline const Node hasMethod = aml("hasMethod");
inline const Node hasInfrastructure = aml("hasInfrastructure");
inline const Node hasResult = aml("hasResult");
inline const Node hasCategory = aml("hasCategory");
inline const Node hasParameter = aml("hasParameter");
inline const Node hasSeriesSet = aml("hasSeriesSet");
inline const Node hasAgent = aml("hasAgent");
inline const Node hasRole = aml("hasRole");
inline const Node roleType = aml("roleType");
inline const Node requiresRole = aml("requiresRole");
inline const Node hasUnit = aml("hasUnit");
inline const Node hasPlotScale = aml("hasPlotScale");
inline const Node hasEncodingType = aml("hasEncodingType");
inline const Node hasContainer = aml("hasContainer");
inline const Node hasContainedSample = aml("hasContainedSample");
inline const Node hasChange = aml("hasChange");
inline const Node action = aml("action");
inline const Node affects = aml("affects");
inline const Node signs = aml("signs");
inline const Node usesTechnique = aml("usesTechnique");
inline const Node extends = aml("extends");
inline const Node hasSpecification = aml("hasSpecification");
inline const Node hasDataPointSpecification = aml("hasDataPointSpecification");
inline const Node pointsTo = aml("pointsTo");
inline const Node subject = aml("subject");
inline const Node hasReferenceSet = aml("hasReferenceSet");
inline const Node start = aml("start");
inline const Node increment = aml("increment");

// --- data properties ---
inline const Node id = aml("id");
inline const Node name = aml("name");
inline const Node version = aml("version");
inline const Node citation = aml("citation");
inline const Node isImplemented = aml("isImplemented");
inline const Node isRequired = aml("isRequired");
inline const Node startValue = aml("startValue");
inline const Node endValue = aml("endValue");
inline const Node hasFunction = aml("hasFunction");
inline const Node hasUseCase = aml("hasUseCase");
inline const Node dependency = aml("dependency");
inline const Node valueType = aml("valueType");
inline const Node length = aml("length");
inline const Node timestamp = aml("timestamp");
inline const Node reason = aml("reason");
inline const Node value = aml("value");
inline const Node minValue = aml("minValue");
inline const Node maxValue = aml("maxValue");
inline const Node allowedValueType = aml("allowedValueType");
inline const Node containerType = aml("containerType");
inline const Node label = aml("label");
inline const Node quantity = aml("quantity");
inline const Node factor = aml("factor");
inline const Node exponent = aml("exponent");
inline const Node operatingSystem = aml("operatingSystem");
inline const Node phone = aml("phone");
inline const Node email = aml("email");
inline const Node manufacturer = aml("manufacturer");
inline const Node serialNumber = aml("serialNumber");
inline const Node firmwareVersion = aml("firmwareVersion");

// --- individuals ---
inline const Node Author = aml("Author");
inline const Node Operator = aml("Operator");
inline const Node Other = aml("Other");
inline const Node Creation = aml("Creation");
inline const Node Deletion = aml("Deletion");
inline const Node Modification = aml("Modification");
inline const Node linearPlotScale = aml("linearPlotScale");
inline const Node logPlotScale = aml("logPlotScale");
inline const Node inversePlotScale = aml("inversePlotScale");

// --- xsd datatypes used for typed literals ---
inline const Node xsd_string = xsd("string");
inline const Node xsd_integer = xsd("integer");
inline const Node xsd_double = xsd("double");
inline const Node xsd_float = xsd("float");
inline const Node xsd_decimal = xsd("decimal");
inline const Node xsd_boolean = xsd("boolean");
inline const Node xsd_dateTime = xsd("dateTime");
inline const Node xsd_base64Binary = xsd("base64Binary");
inline const Node xsd_hexBinary = xsd("hexBinary");

inline Node string_literal(std::string_view s) { return Node::literal(std::string(s)); }
inline Node integer_literal(long long v) {
    return Node::literal(std::to_string(v), xsd_integer.value());
}
inline Node boolean_literal(bool v) {
    return Node::literal(v ? "true" : "false", xsd_boolean.value());
}

/// Classes whose instances count as signable items (the entities an audit
/// trail or signature may target). Kept here so checks and tests agree on
/// what "a subtype of SignableItem" means without a reasoner.
inline const std::set<Node>& signable_item_classes() {
    static const std::set<Node> classes{
        Sample,   Container,      ExperimentStep, Series, SeriesSet, Parameter,
        Category, Experiment,     Method,         Result, Infrastructure,
        Document, SignableItem,
    };
    return classes;
}

}  // namespace animl::vocab
