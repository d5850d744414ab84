#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/lefschetz.hpp"

namespace lefschetz::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome
{
    Json inputs = Json::object();
    Json results = Json::object();
    std::string status = "pass";
    std::string summary;
};

/** Input the command cannot work with; reported with exit code 2. */
class InputError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string matrix;
    std::string bases;
    std::optional<int> groundSize;
    std::string facets;
    std::string ears;
    std::string monomials;
    std::string hText;
    int maxVars = 5;
    bool checkIhl = false;
    bool withIhl = false;
    std::uint64_t seed = 1;
    int resamples = kDefaultMaxResamples;
    int coeffBound = kDefaultCoefficientBound;
};

Json integerJson(const Integer& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return Json(z.convert_to<std::int64_t>());
    return Json(z.str());
}

Json rationalJson(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return integerJson(boost::multiprecision::numerator(q));
    return Json(toString(q));
}

template <typename Scalar>
Json matrixJson(const DenseMatrix<Scalar>& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
        {
            if constexpr (std::is_same_v<Scalar, Integer>)
                row.push_back(integerJson(m(i, j)));
            else
                row.push_back(rationalJson(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string formatSequence(const std::vector<std::int64_t>& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

Json violationJson(const std::optional<Violation>& v)
{
    if (!v)
        return nullptr;
    return Json{{"kind", v->kind}, {"i", v->first}, {"j", v->second}};
}

Json gJson(const HVectorChecks& c)
{
    return Json{{"ok", *c.gOk}, {"violation", violationJson(c.firstViolation)}};
}

Json flatnessJson(const HVectorChecks& c)
{
    return Json{{"ok", *c.flatnessOk}, {"hibi_chain_ok", *c.hibiChainOk}, {"violation", violationJson(c.firstViolation)}};
}

Json checkJson(const CheckReport& c)
{
    Json j{{"passed", c.passed}};
    if (!c.passed)
    {
        j["condition"] = c.condition;
        j["witness"] = c.witness;
        j["index"] = c.index ? Json(*c.index) : Json(nullptr);
        j["message"] = c.message;
    }
    return j;
}

Json mapRanksJson(const std::vector<MapRank>& maps)
{
    Json out = Json::array();
    for (const MapRank& m : maps)
        out.push_back(Json{{"from", m.from}, {"to", m.from + m.power}, {"power", m.power}, {"rank", m.rank},
                           {"injective", m.injective}});
    return out;
}

Json ihlJson(const IHLReport& r)
{
    return Json{{"k", r.k},
                {"dims", r.dims},
                {"lefschetz", mapRanksJson(r.lefschetz)},
                {"steps", mapRanksJson(r.steps)},
                {"all_injective", r.allInjective()}};
}

std::ifstream openInput(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

SimplicialComplex loadComplex(const std::string& path)
{
    auto in = openInput(path);
    return SimplicialComplex(io::readFaces(in));
}

Json srIhlJson(const SimplicialComplex& s, const Options& opt, std::string& status)
{
    Json j = Json::object();
    try
    {
        const QuotientReport q = srIhlCheck(s, opt.seed, opt.resamples, opt.coeffBound);
        const LsopCandidate theta = randomLsop(s, q.seedUsed, opt.coeffBound);
        j["seed_used"] = q.seedUsed;
        j["resamples_used"] = q.resamplesUsed;
        j["theta"] = matrixJson(theta.forms);
        j["dims"] = q.dims;
        j["is_lsop"] = q.isLsop;
        j["matches_h"] = q.matchesH;
        j["ihl"] = ihlJson(*q.ihl);
        j["outcome"] = *q.status == IhlStatus::Pass ? "pass" : "inconclusive";
        if (*q.status == IhlStatus::Inconclusive)
            status = "inconclusive";
    }
    catch (const LsopNotFound& e)
    {
        j["outcome"] = "inconclusive";
        j["error"] = e.what();
        status = "inconclusive";
    }
    return j;
}

Outcome analyzeMatroid(const Options& opt)
{
    Outcome o;
    if (opt.matrix.empty() == opt.bases.empty())
        throw InputError("give exactly one of --matrix or --bases");

    std::optional<Matroid> m;
    if (!opt.matrix.empty())
    {
        o.inputs["matrix"] = opt.matrix;
        auto in = openInput(opt.matrix);
        m = Matroid::fromMatrix(io::readMatrix(in));
    }
    else
    {
        o.inputs["bases"] = opt.bases;
        auto in = openInput(opt.bases);
        std::vector<Face> bases = io::readFaces(in);
        int n = 0;
        for (const Face& b : bases)
            for (int e : b)
                n = std::max(n, e);
        if (opt.groundSize)
        {
            if (*opt.groundSize < n)
                throw InputError("--n is smaller than the largest element in the bases file");
            n = *opt.groundSize;
        }
        o.inputs["n"] = n;
        m = Matroid::fromBases(n, std::move(bases));
    }
    if (opt.withIhl)
        o.inputs["ihl"] = Json{{"seed", opt.seed}, {"resamples", opt.resamples}, {"coeff_bound", opt.coeffBound}};

    const SimplicialComplex complex = independenceComplex(*m);
    const FaceVectors fv = faceVectors(complex);
    const ColoopReport cl = coloops(*m);

    o.results["ground_size"] = m->groundSet().size();
    o.results["rank"] = m->rank();
    o.results["bases"] = complex.facets().size();
    o.results["f"] = fv.f;
    o.results["h"] = fv.h;
    o.results["g"] = fv.g;
    o.results["coloops"] = cl.coloops;
    o.results["coloop_free"] = cl.coloopFree;

    bool ok = true;
    if (complex.vertices().size() <= 20)
    {
        const CheckReport prop = verifyMatroidProperty(complex);
        o.results["matroid_property"] = checkJson(prop);
        ok = ok && prop.passed;
    }
    else
    {
        o.results["matroid_property"] = nullptr;
    }

    // Inequalities apply to coloop-free matroids.
    const HVectorChecks flat = checkFlatness(fv.h);
    const HVectorChecks g = checkGInequalities(fv.h);
    Json flatJson = flatnessJson(flat);
    Json gjson = gJson(g);
    flatJson["applicable"] = cl.coloopFree;
    gjson["applicable"] = cl.coloopFree;
    o.results["flatness"] = flatJson;
    o.results["g_inequalities"] = gjson;
    if (cl.coloopFree)
        ok = ok && *flat.flatnessOk && *g.gOk;

    if (!ok)
        o.status = "fail";
    if (opt.withIhl)
    {
        std::string ihlStatus = "pass";
        o.results["sr_ihl"] = srIhlJson(complex, opt, ihlStatus);
        if (o.status == "pass" && ihlStatus != "pass")
            o.status = ihlStatus;
    }
    o.summary = "rank " + std::to_string(m->rank()) + ", h=" + formatSequence(fv.h) +
                (cl.coloopFree ? ", coloop-free" : ", has coloops");
    return o;
}

Outcome faceVectorsCommand(const Options& opt)
{
    Outcome o;
    o.inputs["facets"] = opt.facets;
    const SimplicialComplex s = loadComplex(opt.facets);
    const FaceVectors fv = faceVectors(s);
    std::vector<std::int64_t> reversed(fv.h.rbegin(), fv.h.rend());
    o.results["vertices"] = s.vertices().size();
    o.results["facets"] = s.facets().size();
    o.results["rank"] = s.rank();
    o.results["pure"] = s.isPure();
    o.results["f"] = fv.f;
    o.results["h"] = fv.h;
    o.results["g"] = fv.g;
    o.results["h_printed_formula"] = fv.hPrinted;
    o.results["printed_formula_is_reversal"] = fv.hPrinted == reversed;
    if (fv.hPrinted != reversed)
        o.status = "fail";
    o.summary = "f=" + formatSequence(fv.f) + ", h=" + formatSequence(fv.h);
    return o;
}

Outcome checkH(const Options& opt)
{
    Outcome o;
    std::vector<std::int64_t> h;
    try
    {
        h = io::parseIntegerList(opt.hText);
    }
    catch (const std::exception& e)
    {
        throw InputError(std::string("--h: ") + e.what());
    }
    o.inputs["h"] = h;
    if (h.empty() || h[0] != 1)
        throw InputError("--h must start with 1");
    const CheckReport mseq = isMSequence(h);
    const HVectorChecks g = checkGInequalities(h);
    const HVectorChecks flat = checkFlatness(h);
    o.results["h"] = h;
    o.results["g"] = g.g;
    o.results["m_sequence"] = checkJson(mseq);
    o.results["g_inequalities"] = gJson(g);
    o.results["flatness"] = flatnessJson(flat);
    if (!mseq.passed || !*g.gOk || !*flat.flatnessOk)
        o.status = "fail";
    o.summary = "h=" + formatSequence(h) + (mseq.passed ? "" : ", not an M-sequence");
    return o;
}

Outcome oseq(const Options& opt)
{
    Outcome o;
    o.inputs["monomials"] = opt.monomials;
    o.inputs["check_ihl"] = opt.checkIhl;
    auto in = openInput(opt.monomials);
    const MonomialSet ms = io::readMonomials(in);
    const InverseSystemRing ring = orderIdeal(ms);
    const PureOSequence seq = pureOSequence(ms);
    const HVectorChecks flat = checkFlatness(seq.h);
    const HVectorChecks g = checkGInequalities(seq.h);
    const CheckReport mseq = isMSequence(seq.h);
    const ProjectionReport proj = projectionSeparation(ring, ms);

    o.results["vars"] = ms.vars();
    o.results["k"] = ms.degree();
    o.results["generators"] = ms.generators();
    o.results["h"] = seq.h;
    o.results["unused_variables"] = seq.unusedVariables;
    o.results["m_sequence"] = checkJson(mseq);
    o.results["flatness"] = flatnessJson(flat);
    o.results["g_inequalities"] = gJson(g);
    Json factors = Json::array();
    for (std::size_t j = 0; j < ms.generators().size(); ++j)
        factors.push_back(factorRingDims(ms, j));
    o.results["factor_ring_dims"] = factors;
    o.results["projection"] = Json{{"check", checkJson(proj.check)}, {"multiplicity", proj.multiplicity}};

    bool ok = mseq.passed && *flat.flatnessOk && *g.gOk && proj.check.passed;
    if (opt.checkIhl)
    {
        const IHLReport ihl = checkIhl(ring);
        o.results["ihl"] = ihlJson(ihl);
        ok = ok && ihl.allInjective();
    }
    if (!ok)
        o.status = "fail";
    o.summary = "h=" + formatSequence(seq.h);
    return o;
}

Outcome oseqRealize(const Options& opt)
{
    Outcome o;
    std::vector<std::int64_t> h;
    try
    {
        h = io::parseIntegerList(opt.hText);
    }
    catch (const std::exception& e)
    {
        throw InputError(std::string("--h: ") + e.what());
    }
    o.inputs["h"] = h;
    o.inputs["max_vars"] = opt.maxVars;
    const RealizationResult r = findPureORealization(h, opt.maxVars);
    o.results["found"] = r.witness.has_value();
    if (r.witness)
    {
        o.results["vars"] = r.witness->vars();
        o.results["witness"] = r.witness->generators();
        o.results["witness_h"] = pureOSequence(*r.witness).h;
    }
    else
    {
        o.results["witness"] = nullptr;
    }
    o.results["search_space"] = integerJson(r.searchSpace);
    o.results["nodes_visited"] = r.nodesVisited;
    if (!r.witness)
        o.status = "fail";
    o.summary = r.witness ? "realization found" : "none found";
    return o;
}

Outcome srIhl(const Options& opt)
{
    Outcome o;
    o.inputs["facets"] = opt.facets;
    o.inputs["seed"] = opt.seed;
    o.inputs["resamples"] = opt.resamples;
    o.inputs["coeff_bound"] = opt.coeffBound;
    const SimplicialComplex s = loadComplex(opt.facets);
    if (!s.isPure())
        throw InputError("complex is not pure");
    const FaceVectors fv = faceVectors(s);
    o.results["rank"] = s.rank();
    o.results["h"] = fv.h;
    o.results["sr_ihl"] = srIhlJson(s, opt, o.status);
    o.summary = "h=" + formatSequence(fv.h) + ", IHL " + o.status;
    return o;
}

Outcome gale(const Options& opt)
{
    Outcome o;
    o.inputs["matrix"] = opt.matrix;
    auto in = openInput(opt.matrix);
    IntegerMatrix a;
    try
    {
        a = toInteger(io::readMatrix(in));
    }
    catch (const std::invalid_argument& e)
    {
        throw InputError(e.what());
    }
    const IntegerMatrix b = galeDual(a);
    const IntegerMatrix product = a * b;
    const bool zero = product.isZero();
    const bool fullRank = rank(b) == b.cols() && b.cols() == a.cols() - a.rows();
    const bool saturated = isSaturated(b);
    o.results["d"] = a.rows();
    o.results["n"] = a.cols();
    o.results["b"] = matrixJson(b);
    o.results["unimodular"] = isUnimodular(a);
    o.results["checks"] = Json{{"product_zero", zero}, {"rank_n_minus_d", fullRank}, {"saturated", saturated}};
    if (!(zero && fullRank && saturated))
        o.status = "fail";
    o.summary = "Gale dual with " + std::to_string(b.cols()) + " columns";
    return o;
}

Outcome psVerify(const Options& opt)
{
    Outcome o;
    o.inputs["facets"] = opt.facets;
    o.inputs["ears"] = opt.ears;
    const SimplicialComplex s = loadComplex(opt.facets);
    auto in = openInput(opt.ears);
    const EarDecomposition d = io::readEars(in);
    const CheckReport report = verifyPsDecomposition(s, d);
    o.results["ears"] = d.ears.size();
    o.results["passed"] = report.passed;
    o.results["condition"] = report.passed ? Json(nullptr) : Json(report.condition);
    o.results["ear_index"] = report.index ? Json(*report.index) : Json(nullptr);
    o.results["witness"] = report.passed ? Json(nullptr) : Json(report.witness);
    o.results["message"] = report.message;
    if (!report.passed)
        o.status = "fail";
    o.summary = report.passed ? "decomposition verified" : "decomposition rejected: " + report.condition;
    return o;
}

int exitCodeFor(const std::string& status)
{
    if (status == "pass")
        return kPass;
    if (status == "fail")
        return kFail;
    if (status == "inconclusive")
        return kInconclusive;
    return kUsageError;
}

void emit(std::ostream& out, const std::string& command, const Json& inputs, const Json& results,
          const std::string& status)
{
    Json doc;
    doc["schema"] = 1;
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = results;
    doc["status"] = status;
    out << doc.dump(2) << '\n';
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Face vectors, Macaulay inequalities and Lefschetz certificates for matroids and pure O-sequences",
                 "lefschetz"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options opt;

    auto addIhlOptions = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "Seed for the random l.s.o.p.");
        cmd->add_option("--resamples", opt.resamples, "Maximum number of redraws")->check(CLI::NonNegativeNumber);
        cmd->add_option("--coeff-bound", opt.coeffBound, "Coefficients are drawn from [-B, B]")
            ->check(CLI::PositiveNumber);
    };

    std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> commands;

    auto* analyze = app.add_subcommand("analyze-matroid", "f/h/g-vectors, coloops and inequalities of a matroid");
    analyze->add_option("--matrix", opt.matrix, "Column configuration (TSV of integers or p/q)");
    analyze->add_option("--bases", opt.bases, "Basis list, one basis per line");
    analyze->add_option("--n", opt.groundSize, "Ground set size for --bases");
    analyze->add_flag("--with-ihl", opt.withIhl, "Also certify IHL of an Artinian reduction");
    addIhlOptions(analyze);
    commands.emplace_back(analyze, analyzeMatroid);

    auto* fvec = app.add_subcommand("face-vectors", "f-, h- and g-vectors of a complex");
    fvec->add_option("--facets", opt.facets, "Facet file")->required();
    commands.emplace_back(fvec, faceVectorsCommand);

    auto* checkh = app.add_subcommand("check-h", "Macaulay, g- and flatness checks on a sequence");
    checkh->add_option("--h", opt.hText, "Comma-separated h_0,...,h_k")->required();
    commands.emplace_back(checkh, checkH);

    auto* os = app.add_subcommand("oseq", "Pure O-sequence of monomial generators");
    os->add_option("--monomials", opt.monomials, "Monomial file")->required();
    os->add_flag("--check-ihl", opt.checkIhl, "Certify IHL for ω = sum of the ∂_i");
    commands.emplace_back(os, oseq);

    auto* realize = app.add_subcommand("oseq-realize", "Search for monomials realizing a pure O-sequence");
    realize->add_option("--h", opt.hText, "Comma-separated h_0,...,h_k")->required();
    realize->add_option("--max-vars", opt.maxVars, "Largest number of variables allowed");
    commands.emplace_back(realize, oseqRealize);

    auto* sr = app.add_subcommand("sr-ihl", "IHL certificate for a Stanley-Reisner Artinian reduction");
    sr->add_option("--facets", opt.facets, "Facet file")->required();
    addIhlOptions(sr);
    commands.emplace_back(sr, srIhl);

    auto* gd = app.add_subcommand("gale", "Integer Gale dual of a matrix with coprime maximal minors");
    gd->add_option("--matrix", opt.matrix, "Integer matrix (TSV)")->required();
    commands.emplace_back(gd, gale);

    auto* ps = app.add_subcommand("ps-verify", "Check a PS-ear decomposition");
    ps->add_option("--facets", opt.facets, "Facet file")->required();
    ps->add_option("--ears", opt.ears, "Ears file")->required();
    commands.emplace_back(ps, psVerify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        err << app.help();
        return kPass;
    }
    catch (const CLI::ParseError& e)
    {
        std::string name;
        for (auto* sub : app.get_subcommands())
            name = sub->get_name();
        emit(out, name, Json::object(), Json{{"error", e.what()}}, "error");
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    for (const auto& [cmd, handler] : commands)
    {
        if (!cmd->parsed())
            continue;
        const std::string name = cmd->get_name();
        try
        {
            const Outcome o = handler(opt);
            emit(out, name, o.inputs, o.results, o.status);
            err << name << ": " << o.status << (o.summary.empty() ? "" : " (" + o.summary + ")") << '\n';
            return exitCodeFor(o.status);
        }
        catch (const std::exception& e)
        {
            emit(out, name, Json::object(), Json{{"error", e.what()}}, "error");
            err << name << ": error: " << e.what() << '\n';
            return kUsageError;
        }
    }
    return kUsageError;
}

}   // namespace lefschetz::cli
