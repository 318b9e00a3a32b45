#include "tsk/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tsk {

namespace {

const Int kJsonMax = (Int(1) << 53) - 1;

void expect_keys(const json& j, const std::string& where,
                 const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
    if (!j.is_object())
        throw input_error("BadDocument", where + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw input_error("UnknownField", where + ": unknown field \"" + it.key() + "\"");
    for (const auto& k : required)
        if (!j.contains(k))
            throw input_error("MissingField", where + ": missing field \"" + k + "\"");
}

std::size_t json_to_count(const json& j, const std::string& field) {
    Int v = json_to_int(j, field);
    if (v < 0)
        throw input_error("BadField", field + " must be nonnegative");
    if (v > 1000000)
        throw input_error("BadField", field + " is implausibly large");
    return static_cast<std::size_t>(v.get_ui());
}

} // namespace

json int_to_json(const Int& x) {
    if (abs(x) <= kJsonMax) {
        return json(static_cast<std::int64_t>(x.get_si()));
    }
    return json(x.get_str());
}

Int json_to_int(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw input_error("BadField", field + " is not a decimal integer string");
        }
    }
    throw input_error("BadField", field + " must be an integer or a decimal string");
}

json vec_to_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

IVec json_to_vec(const json& j, const std::string& field) {
    if (!j.is_array())
        throw input_error("BadField", field + " must be an array");
    IVec v;
    for (const auto& x : j) v.push_back(json_to_int(x, field));
    return v;
}

json vec_list_to_json(const std::vector<IVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec_to_json(v));
    return a;
}

std::vector<IVec> json_to_vec_list(const json& j, const std::string& field) {
    if (!j.is_array())
        throw input_error("BadField", field + " must be an array of arrays");
    std::vector<IVec> vs;
    for (const auto& x : j) vs.push_back(json_to_vec(x, field));
    return vs;
}

json group_to_json(const AbelianGroup& g) {
    json j;
    j["free_rank"] = int_to_json(Int(static_cast<long>(g.free_rank)));
    j["torsion"] = vec_to_json(g.torsion);
    return j;
}

AbelianGroup json_to_group(const json& j, const std::string& field) {
    expect_keys(j, field, {"free_rank", "torsion"});
    AbelianGroup g;
    g.free_rank = json_to_count(j.at("free_rank"), field + ".free_rank");
    g.torsion = json_to_vec(j.at("torsion"), field + ".torsion");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (g.torsion[i] < 2)
            throw input_error("BadField", field + ".torsion entries must be at least 2");
        if (i + 1 < g.torsion.size() && g.torsion[i + 1] % g.torsion[i] != 0)
            throw input_error("BadField",
                              field + ".torsion must form a divisibility chain d1 | d2 | ...");
    }
    return g;
}

namespace {

MonoidDoc parse_monoid_payload(const json& j, const std::string& where) {
    expect_keys(j, where, {"rank", "generators"}, {"mode"});
    MonoidDoc d;
    d.rank = json_to_count(j.at("rank"), where + ".rank");
    d.generators = json_to_vec_list(j.at("generators"), where + ".generators");
    if (j.contains("mode")) {
        std::string m = j.at("mode").get<std::string>();
        if (m == "saturate")
            d.mode = BuildMode::saturate;
        else if (m == "strict")
            d.mode = BuildMode::strict;
        else
            throw input_error("BadField", where + ".mode must be \"saturate\" or \"strict\"");
    }
    return d;
}

std::vector<std::size_t> parse_index_list(const json& j, const std::string& field,
                                          std::size_t limit) {
    if (!j.is_array())
        throw input_error("BadField", field + " must be an array of 1-based indices");
    std::vector<std::size_t> out;
    for (const auto& x : j) {
        Int v = json_to_int(x, field);
        if (v < 1 || v > static_cast<long>(limit))
            throw input_error("BadField", field + " has an index out of range");
        out.push_back(static_cast<std::size_t>(v.get_ui()) - 1);
    }
    return out;
}

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error("BadJson", std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("MissingField", "document: missing field \"kind\"");
    if (!j.contains("format_version") || !j.at("format_version").is_number_integer() ||
        j.at("format_version").get<int>() != 1)
        throw input_error("BadField", "format_version must equal 1");
    std::string kind = j.at("kind").get<std::string>();

    if (kind == "monoid") {
        expect_keys(j, "document", {"kind", "format_version", "rank", "generators"}, {"mode"});
        json payload = j;
        payload.erase("kind");
        payload.erase("format_version");
        return parse_monoid_payload(payload, "monoid");
    }
    if (kind == "morphism") {
        expect_keys(j, "document", {"kind", "format_version", "monoid", "matrix"});
        MorphismDoc d;
        d.monoid = parse_monoid_payload(j.at("monoid"), "morphism.monoid");
        d.matrix = json_to_vec_list(j.at("matrix"), "morphism.matrix");
        return d;
    }
    if (kind == "action") {
        expect_keys(j, "document", {"kind", "format_version", "group", "weights"});
        ActionDoc d;
        d.group = json_to_group(j.at("group"), "action.group");
        d.weights = json_to_vec_list(j.at("weights"), "action.weights");
        return d;
    }
    if (kind == "fan") {
        expect_keys(j, "document", {"kind", "format_version", "N", "rays", "cones"},
                    {"beta", "extra"});
        FanDoc d;
        d.raw.n_group = json_to_group(j.at("N"), "fan.N");
        d.raw.rays = json_to_vec_list(j.at("rays"), "fan.rays");
        if (!j.at("cones").is_array())
            throw input_error("BadField", "fan.cones must be an array of index arrays");
        for (const auto& c : j.at("cones"))
            d.raw.cones.push_back(parse_index_list(c, "fan.cones", d.raw.rays.size()));
        if (j.contains("beta")) {
            d.raw.beta_rays = json_to_vec_list(j.at("beta"), "fan.beta");
        } else {
            d.canonical_beta = true;
            for (const auto& r : d.raw.rays) {
                IVec lift = make_primitive(r);
                lift.insert(lift.end(), d.raw.n_group.torsion.size(), Int(0));
                d.raw.beta_rays.push_back(lift);
            }
        }
        if (j.contains("extra"))
            d.raw.beta_extra = json_to_vec_list(j.at("extra"), "fan.extra");
        return d;
    }
    throw input_error("BadField", "unknown document kind \"" + kind + "\"");
}

namespace {

void render_rec(const json& j, std::ostringstream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << pad << it.key() << ":";
            if (it->is_object() || (it->is_array() && !it->empty() &&
                                    (it->front().is_object() || it->front().is_array()))) {
                os << "\n";
                render_rec(*it, os, indent + 1);
            } else {
                os << " " << it->dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (x.is_object()) {
                os << pad << "-\n";
                render_rec(x, os, indent + 1);
            } else {
                os << pad << "- " << x.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

json indices_1based(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (std::size_t i : v) a.push_back(i + 1);
    return a;
}

} // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    render_rec(j, os, 0);
    return os.str();
}

json report_monoid_mfr(const MonoidBuild& b, const MonoidMorphism& mfr) {
    json j;
    j["command"] = "monoid mfr";
    j["monoid"]["rank"] = static_cast<std::int64_t>(b.monoid.rank);
    j["monoid"]["min_generators"] = vec_list_to_json(b.monoid.min_generators);
    j["monoid"]["simplicial"] = b.monoid.is_simplicial();
    j["resolution"]["rank"] = static_cast<std::int64_t>(mfr.matrix.rows());
    j["resolution"]["rows"] = vec_list_to_json(mfr.matrix.row_list());
    auto ck = cokernel(mfr.matrix);
    j["cokernel"] = group_to_json(ck.group);
    j["generator_images"] = vec_list_to_json([&] {
        std::vector<IVec> imgs;
        for (const auto& g : b.gen_images) imgs.push_back(mfr.matrix.apply(g));
        return imgs;
    }());
    return j;
}

json report_monoid_qmfr(const std::optional<QmfrCertificate>& cert) {
    json j;
    j["command"] = "monoid qmfr";
    j["qmfr"] = cert.has_value();
    if (cert) {
        j["face"] = indices_1based(cert->face_h);
        j["permutation"] = indices_1based(cert->perm);
        j["resolution_rows"] = vec_list_to_json(cert->mfr.matrix.row_list());
    }
    return j;
}

json report_monoid_quotient(const FaceQuotient& q, const std::vector<std::size_t>& face) {
    json j;
    j["command"] = "monoid quotient";
    j["face_rays"] = indices_1based(face);
    j["quotient"]["rank"] = static_cast<std::int64_t>(q.quotient.rank);
    j["quotient"]["min_generators"] = vec_list_to_json(q.quotient.min_generators);
    j["f0"] = indices_1based(q.f0);
    j["surviving"] = indices_1based(q.surviving);
    j["induced_rows"] = vec_list_to_json(q.induced.matrix.row_list());
    return j;
}

json report_inv_analyze(const CstReport& rep) {
    json j;
    j["command"] = "inv analyze";
    j["group"] = group_to_json(rep.action.group);
    j["weights"] = vec_list_to_json(rep.action.weights);
    j["hypothesis_ok"] = rep.inv.hypothesis_ok;
    j["invariant_monoid"]["rank"] = static_cast<std::int64_t>(rep.inv.monoid.rank);
    j["invariant_monoid"]["generators"] = vec_list_to_json(rep.inv.ambient_generators);
    j["invariant_monoid"]["simplicial"] = rep.inv.monoid.is_simplicial();
    j["oracle_free"] = rep.oracle_verdict;
    switch (rep.verdict) {
        case Verdict::Polynomial:
            j["verdict"] = "Polynomial";
            break;
        case Verdict::NotPolynomialNoMsop:
            j["verdict"] = "NotPolynomial";
            j["reason"] = "NoMSOP";
            break;
        case Verdict::NotPolynomialNotPseudoReflection:
            j["verdict"] = "NotPolynomial";
            j["reason"] = "NotPseudoReflectionGenerated";
            break;
        case Verdict::OracleOnly:
            j["verdict"] = rep.oracle_verdict ? "Polynomial" : "NotPolynomial";
            j["reason"] = "HypothesisViolated";
            break;
    }
    if (rep.msop) {
        j["msop"]["s"] = indices_1based(rep.msop->s);
        j["msop"]["basis"] = vec_list_to_json(rep.msop->msop_basis);
        j["msop"]["p"] = vec_list_to_json(rep.msop->p_basis);
        j["msop"]["a"] = vec_to_json(rep.msop->a);
    }
    if (rep.reduction) {
        j["reduction"]["quotient"] = group_to_json(rep.reduction->quotient);
        j["reduction"]["reduced_weights"] = vec_list_to_json(rep.reduction->reduced.weights);
        j["reduction"]["f0"] = indices_1based(rep.reduction->f0);
    }
    if (rep.pseudo_reflection)
        j["pseudo_reflection_generated"] = *rep.pseudo_reflection;
    if (rep.verdict == Verdict::Polynomial ||
        (rep.verdict == Verdict::OracleOnly && rep.oracle_verdict))
        j["free_generators"] = vec_list_to_json(rep.free_generators);
    return j;
}

json report_inv_oracle(const InvariantMonoid& inv) {
    json j;
    j["command"] = "inv oracle";
    j["hypothesis_ok"] = inv.hypothesis_ok;
    j["hilbert_basis"] = vec_list_to_json(inv.ambient_generators);
    j["free"] = freeness_oracle(inv.monoid);
    return j;
}

json report_fan_validate(const StackyFan& f) {
    json j;
    j["command"] = "fan validate";
    j["valid"] = true;
    j["rays"] = vec_list_to_json(f.rays);
    j["b"] = vec_to_json(f.b);
    json mc = json::array();
    for (std::size_t c : f.maximal_cones) mc.push_back(indices_1based(f.cones[c]));
    j["maximal_cones"] = mc;
    j["witness_cones"] = indices_1based(f.witness_cone);
    return j;
}

json report_fan_presentation(const StackyFan& f, const QuotientPresentation& pres) {
    json j;
    j["command"] = "fan presentation";
    j["coordinates"] = static_cast<std::int64_t>(pres.coordinate_count);
    j["group"] = group_to_json(pres.dg.group);
    j["weights"] = vec_list_to_json(pres.dg.weights);
    json mono = json::array();
    for (const auto& m : pres.ideal.monomials) mono.push_back(indices_1based(m));
    j["monomials"] = mono;
    json excl = json::array();
    for (const auto& e : pres.ideal.excluded) excl.push_back(indices_1based(e));
    j["excluded"] = excl;
    json charts = json::array();
    for (const auto& ch : pres.charts) {
        json c;
        c["cone"] = indices_1based(f.cones[ch.cone_index]);
        c["invariant_check"] = ch.invariant_check;
        c["p_sigma_generators"] = vec_list_to_json(ch.p_sigma.generators);
        charts.push_back(c);
    }
    j["charts"] = charts;
    j["all_checks_passed"] = pres.all_checks_passed;
    return j;
}

json report_fan_chart(const ChartData& ch) {
    json j;
    j["command"] = "fan chart";
    j["cone_index"] = static_cast<std::int64_t>(ch.cone_index + 1);
    std::string sig;
    for (bool b : ch.coordinate_in_sigma) sig += b ? 'N' : 'Z';
    j["signature"] = sig;
    j["p_sigma"]["unit_rank"] = static_cast<std::int64_t>(ch.p_sigma.unit_basis.size());
    j["p_sigma"]["sharp_generators"] = vec_list_to_json(ch.p_sigma.sharp.min_generators);
    j["p_sigma"]["generators"] = vec_list_to_json(ch.p_sigma.generators);
    j["i_sigma_rows"] = vec_list_to_json(ch.i_sigma.row_list());
    j["invariant_check"] = ch.invariant_check;
    return j;
}

json report_fan_datum(const ConeDatum& cd) {
    json j;
    j["command"] = "fan datum";
    j["b"] = vec_to_json(cd.datum.b);
    j["w"] = vec_list_to_json(cd.datum.w);
    j["extra_indices"] = indices_1based(cd.extra_indices);
    j["p_sigma_generators"] = vec_list_to_json(cd.p_sigma.min_generators);
    return j;
}

} // namespace tsk
