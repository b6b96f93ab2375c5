#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfcyclic/approximation.hpp"
#include "hopfcyclic/homology.hpp"
#include "hopfcyclic/lambda_cat.hpp"

using nlohmann::json;
using namespace hopfcyclic;

namespace {

struct Flags {
    std::optional<std::size_t> degree;
    std::optional<std::string> theory;
    std::optional<std::string> flavor;
    std::optional<std::string> pipeline;
    std::optional<std::string> expression;
    std::optional<std::string> output;
    bool certify = false;
    bool oracle = false;
    bool emit_spec = false;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---- scalar and operator (de)serialization ---------------------------------

template <class F>
typename F::Value parse_scalar(const F& K, const json& j) {
    if (j.is_string()) return K.parse(j.get<std::string>());
    if (j.is_number_integer()) return K.from_long(j.get<long>());
    throw FormatError("scalar entries must be strings or integers, got " + j.dump());
}

template <class F>
json emit_scalar(const F& K, const typename F::Value& v) {
    if constexpr (std::is_same_v<F, Rationals>)
        return json(K.show(v));
    else
        return json(v);
}

std::size_t parse_index(const json& j, std::size_t bound, const char* what) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw FormatError(std::string("bad ") + what + " index: " + j.dump());
    auto v = static_cast<std::size_t>(j.get<long>());
    if (v >= bound)
        throw FormatError(std::string(what) + " index " + std::to_string(v) +
                          " out of range (dim " + std::to_string(bound) + ")");
    return v;
}

// triples [i, j, [coeffs over the output basis]] for a map V1 (x) V2 -> Vout
template <class F>
Matrix<F> parse_bilinear(const F& K, const json& j, std::size_t dout, std::size_t d1,
                         std::size_t d2, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of triples");
    Matrix<F> m(K, dout, d1 * d2);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_array() || t[2].size() != dout)
            throw FormatError(std::string(what) + " entries must be [i, j, [" +
                              std::to_string(dout) + " coeffs]], got " + t.dump());
        std::size_t i = parse_index(t[0], d1, what);
        std::size_t jj = parse_index(t[1], d2, what);
        for (std::size_t k = 0; k < dout; ++k) {
            auto v = parse_scalar(K, t[2][k]);
            if (!K.is_zero(v)) m.add_to(k, i * d2 + jj, v);
        }
    }
    return m;
}

// entries [i, [[j, k, c], ...]] for a map Vin -> V1 (x) V2
template <class F>
Matrix<F> parse_cobilinear(const F& K, const json& j, std::size_t din, std::size_t d1,
                           std::size_t d2, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of entries");
    Matrix<F> m(K, d1 * d2, din);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_array())
            throw FormatError(std::string(what) + " entries must be [i, [[j, k, c], ...]], got " +
                              e.dump());
        std::size_t i = parse_index(e[0], din, what);
        for (const auto& t : e[1]) {
            if (!t.is_array() || t.size() != 3)
                throw FormatError(std::string(what) + " terms must be [j, k, c], got " + t.dump());
            std::size_t jj = parse_index(t[0], d1, what);
            std::size_t k = parse_index(t[1], d2, what);
            auto v = parse_scalar(K, t[2]);
            if (!K.is_zero(v)) m.add_to(jj * d2 + k, i, v);
        }
    }
    return m;
}

template <class F>
Matrix<F> parse_column(const F& K, const json& j, std::size_t d, const char* what) {
    if (!j.is_array() || j.size() != d)
        throw FormatError(std::string(what) + " must be a vector of " + std::to_string(d) +
                          " coeffs");
    Matrix<F> m(K, d, 1);
    for (std::size_t k = 0; k < d; ++k) {
        auto v = parse_scalar(K, j[k]);
        if (!K.is_zero(v)) m.add_to(k, 0, v);
    }
    return m;
}

template <class F>
Matrix<F> parse_row(const F& K, const json& j, std::size_t d, const char* what) {
    return parse_column(K, j, d, what).transpose();
}

// matrix given as a list of columns
template <class F>
Matrix<F> parse_columns(const F& K, const json& j, std::size_t rows, std::size_t cols,
                        const char* what) {
    if (!j.is_array() || j.size() != cols)
        throw FormatError(std::string(what) + " must list " + std::to_string(cols) + " columns");
    Matrix<F> m(K, rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (!j[c].is_array() || j[c].size() != rows)
            throw FormatError(std::string(what) + " columns must hold " + std::to_string(rows) +
                              " coeffs");
        for (std::size_t r = 0; r < rows; ++r) {
            auto v = parse_scalar(K, j[c][r]);
            if (!K.is_zero(v)) m.add_to(r, c, v);
        }
    }
    return m;
}

template <class F>
json emit_bilinear(const F& K, const Matrix<F>& m, std::size_t d1, std::size_t d2) {
    json out = json::array();
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            json coeffs = json::array();
            for (std::size_t k = 0; k < m.rows(); ++k)
                coeffs.push_back(emit_scalar(K, m.get(k, i * d2 + j)));
            out.push_back(json::array({i, j, coeffs}));
        }
    return out;
}

template <class F>
json emit_cobilinear(const F& K, const Matrix<F>& m, std::size_t d1, std::size_t d2) {
    json out = json::array();
    for (std::size_t i = 0; i < m.cols(); ++i) {
        json terms = json::array();
        for (const auto& [row, v] : m.column(i))
            terms.push_back(json::array({row / d2, row % d2, emit_scalar(K, v)}));
        out.push_back(json::array({i, terms}));
    }
    return out;
}

template <class F>
json emit_column(const F& K, const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t k = 0; k < m.rows(); ++k) out.push_back(emit_scalar(K, m.get(k, 0)));
    return out;
}

template <class F>
json emit_row(const F& K, const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) out.push_back(emit_scalar(K, m.get(0, k)));
    return out;
}

template <class F>
json emit_columns(const F& K, const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        json col = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(emit_scalar(K, m.get(r, c)));
        out.push_back(col);
    }
    return out;
}

// ---- section parsers --------------------------------------------------------

std::size_t parse_dim(const json& j, const char* what) {
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() <= 0)
        throw FormatError(std::string(what) + " needs a positive integer dim");
    return static_cast<std::size_t>(j["dim"].get<long>());
}

template <class F>
BialgebraSpec<F> parse_bialgebra(const F& K, const json& j) {
    std::size_t d = parse_dim(j, "bialgebra");
    for (const char* key : {"mult", "unit", "comult", "counit"})
        if (!j.contains(key))
            throw FormatError(std::string("bialgebra section is missing '") + key + "'");
    std::optional<Matrix<F>> antipode;
    if (j.contains("antipode")) antipode = parse_columns(K, j["antipode"], d, d, "antipode");
    return BialgebraSpec<F>{K,
                            d,
                            parse_bilinear(K, j["mult"], d, d, d, "mult"),
                            parse_column(K, j["unit"], d, "unit"),
                            parse_cobilinear(K, j["comult"], d, d, d, "comult"),
                            parse_row(K, j["counit"], d, "counit"),
                            antipode};
}

template <class F>
json emit_bialgebra(const BialgebraSpec<F>& B) {
    const F& K = B.field;
    json out{{"dim", B.dim},
             {"mult", emit_bilinear(K, B.mult, B.dim, B.dim)},
             {"unit", emit_column(K, B.unit)},
             {"comult", emit_cobilinear(K, B.comult, B.dim, B.dim)},
             {"counit", emit_row(K, B.counit)}};
    if (B.antipode) out["antipode"] = emit_columns(K, *B.antipode);
    return out;
}

SymmetryKind parse_kind(const json& j) {
    if (!j.is_string()) throw FormatError("datum kind must be a string");
    auto s = j.get<std::string>();
    if (s == "MC") return SymmetryKind::MC;
    if (s == "CA") return SymmetryKind::CA;
    if (s == "MA") return SymmetryKind::MA;
    if (s == "CC") return SymmetryKind::CC;
    throw FormatError("unknown datum kind '" + s + "' (expected MC, CA, MA, or CC)");
}

template <class F>
SymmetryDatum<F> parse_datum(const F& K, const json& j, std::size_t db) {
    if (!j.contains("kind")) throw FormatError("datum section is missing 'kind'");
    SymmetryKind kind = parse_kind(j["kind"]);
    std::size_t d = parse_dim(j, "datum");
    std::optional<Matrix<F>> mult, unit, comult, counit, action, coaction;
    if (algebra_kind(kind)) {
        if (!j.contains("mult") || !j.contains("unit"))
            throw FormatError("algebra-kind datum needs 'mult' and 'unit'");
        mult = parse_bilinear(K, j["mult"], d, d, d, "datum mult");
        unit = parse_column(K, j["unit"], d, "datum unit");
    } else {
        if (!j.contains("comult") || !j.contains("counit"))
            throw FormatError("coalgebra-kind datum needs 'comult' and 'counit'");
        comult = parse_cobilinear(K, j["comult"], d, d, d, "datum comult");
        counit = parse_row(K, j["counit"], d, "datum counit");
    }
    if (module_kind(kind)) {
        if (!j.contains("action")) throw FormatError("module-kind datum needs 'action'");
        action = parse_bilinear(K, j["action"], d, db, d, "datum action");
    } else {
        if (!j.contains("coaction")) throw FormatError("comodule-kind datum needs 'coaction'");
        coaction = parse_cobilinear(K, j["coaction"], d, db, d, "datum coaction");
    }
    return SymmetryDatum<F>{kind, d, mult, unit, comult, counit, action, coaction};
}

template <class F>
json emit_datum(const F& K, const SymmetryDatum<F>& D, std::size_t db) {
    json out{{"kind", kind_name(D.kind)}, {"dim", D.dim}};
    if (D.mult) out["mult"] = emit_bilinear(K, *D.mult, D.dim, D.dim);
    if (D.unit) out["unit"] = emit_column(K, *D.unit);
    if (D.comult) out["comult"] = emit_cobilinear(K, *D.comult, D.dim, D.dim);
    if (D.counit) out["counit"] = emit_row(K, *D.counit);
    if (D.action) out["action"] = emit_bilinear(K, *D.action, db, D.dim);
    if (D.coaction) out["coaction"] = emit_cobilinear(K, *D.coaction, db, D.dim);
    return out;
}

template <class F>
CoefficientDatum<F> parse_coefficients(const F& K, const json& j, std::size_t db) {
    std::size_t d = parse_dim(j, "coefficients");
    std::optional<Matrix<F>> action, coaction;
    if (j.contains("action")) action = parse_bilinear(K, j["action"], d, db, d, "coefficient action");
    if (j.contains("coaction"))
        coaction = parse_cobilinear(K, j["coaction"], d, db, d, "coefficient coaction");
    return CoefficientDatum<F>{d, action, coaction};
}

template <class F>
json emit_coefficients(const F& K, const CoefficientDatum<F>& M, std::size_t db) {
    json out{{"dim", M.dim}};
    if (M.action) out["action"] = emit_bilinear(K, *M.action, db, M.dim);
    if (M.coaction) out["coaction"] = emit_cobilinear(K, *M.coaction, db, M.dim);
    return out;
}

// ---- job spec ---------------------------------------------------------------

const std::vector<std::string> kPipelines{"validate",  "build",          "approx",
                                          "homology",  "hopf-hochschild", "lambda-calc"};
const std::vector<std::string> kTheories{"hh", "hc", "coch"};
const std::vector<std::string> kFlavors{"plus", "n", "z", "lambda"};

template <class F>
struct Job {
    std::string pipeline;
    std::size_t truncation = 0;
    bool has_truncation = false;
    std::string theory;
    std::string flavor = "n";
    std::string expression;
    std::string output = "text";
    std::optional<BialgebraSpec<F>> B;
    std::optional<SymmetryDatum<F>> D;
    std::optional<CoefficientDatum<F>> M;
    json canonical;
};

std::string choose(const std::optional<std::string>& flag, const json& doc, const char* key,
                   const std::string& fallback) {
    if (flag) return *flag;
    if (doc.contains(key)) {
        if (!doc[key].is_string()) throw FormatError(std::string(key) + " must be a string");
        return doc[key].get<std::string>();
    }
    return fallback;
}

void require_member(const std::string& v, const std::vector<std::string>& allowed,
                    const char* what) {
    for (const auto& a : allowed)
        if (v == a) return;
    std::string opts;
    for (const auto& a : allowed) opts += (opts.empty() ? "" : ", ") + a;
    throw FormatError(std::string("unknown ") + what + " '" + v + "' (expected one of " + opts +
                      ")");
}

CategoryFlavor flavor_of(const std::string& s) {
    if (s == "plus") return CategoryFlavor::LambdaPlus;
    if (s == "n") return CategoryFlavor::LambdaN;
    if (s == "z") return CategoryFlavor::LambdaZ;
    return CategoryFlavor::Lambda;
}

template <class F>
Job<F> parse_job(const F& K, const json& doc, const Flags& flags, const std::string& field_name) {
    if (!doc.is_object()) throw FormatError("job file must hold a single object");
    if (doc.contains("format") && doc["format"] != 1)
        throw FormatError("unsupported job format " + doc["format"].dump());
    Job<F> job;
    job.pipeline = choose(flags.pipeline, doc, "pipeline", "");
    if (job.pipeline.empty()) throw FormatError("job needs a pipeline");
    require_member(job.pipeline, kPipelines, "pipeline");
    job.output = choose(flags.output, doc, "output", "text");
    require_member(job.output, {"text", "json"}, "output mode");

    if (flags.degree) {
        job.truncation = *flags.degree;
        job.has_truncation = true;
    } else if (doc.contains("truncation")) {
        if (!doc["truncation"].is_number_integer() || doc["truncation"].get<long>() < 0)
            throw FormatError("truncation must be a non-negative integer");
        job.truncation = static_cast<std::size_t>(doc["truncation"].get<long>());
        job.has_truncation = true;
    }

    if (job.pipeline == "lambda-calc") {
        job.flavor = choose(flags.flavor, doc, "flavor", "n");
        require_member(job.flavor, kFlavors, "flavor");
        job.expression = choose(flags.expression, doc, "expression", "");
        if (job.expression.empty()) throw FormatError("lambda-calc jobs need an expression");
    } else {
        for (const char* key : {"bialgebra", "datum", "coefficients"})
            if (!doc.contains(key))
                throw FormatError(std::string("pipeline ") + job.pipeline + " needs a '" + key +
                                  "' section");
        job.B = parse_bialgebra(K, doc["bialgebra"]);
        job.D = parse_datum(K, doc["datum"], job.B->dim);
        job.M = parse_coefficients(K, doc["coefficients"], job.B->dim);
        if (job.pipeline != "validate" && !job.has_truncation)
            throw FormatError(std::string("pipeline ") + job.pipeline + " needs a truncation");
        if (job.pipeline == "homology") {
            job.theory = choose(flags.theory, doc, "theory", "");
            if (job.theory.empty()) throw FormatError("homology jobs need a theory");
            require_member(job.theory, kTheories, "theory");
            if (job.theory == "coch" && algebra_kind(job.D->kind))
                throw FormatError("theory coch expects a coalgebra-kind datum");
            if (job.theory != "coch" && !algebra_kind(job.D->kind))
                throw FormatError("theory " + job.theory + " expects an algebra-kind datum");
        }
        if (job.pipeline == "hopf-hochschild" && job.D->kind != SymmetryKind::MA)
            throw FormatError("hopf-hochschild jobs need an MA datum");
    }

    json c{{"format", 1}, {"pipeline", job.pipeline}, {"output", job.output}};
    c["field"] = field_name;
    if (job.has_truncation) c["truncation"] = job.truncation;
    if (!job.theory.empty()) c["theory"] = job.theory;
    if (job.pipeline == "lambda-calc") {
        c["flavor"] = job.flavor;
        c["expression"] = job.expression;
    }
    if (job.B) {
        c["bialgebra"] = emit_bialgebra(*job.B);
        c["datum"] = emit_datum(K, *job.D, job.B->dim);
        c["coefficients"] = emit_coefficients(K, *job.M, job.B->dim);
    }
    job.canonical = std::move(c);
    return job;
}

// ---- reporting --------------------------------------------------------------

void print_table(std::ostringstream& out, const std::vector<std::size_t>& dims) {
    out << "degree  dim\n";
    for (std::size_t n = 0; n < dims.size(); ++n) out << n << "  " << dims[n] << "\n";
}

template <class F>
void print_header(std::ostringstream& out, const Job<F>& job, const std::string& field_name) {
    out << "format: 1\n";
    out << "pipeline: " << job.pipeline << "\n";
    out << "field: " << field_name << "\n";
    if (job.B) {
        out << "bialgebra-dim: " << job.B->dim << "\n";
        out << "datum: " << kind_name(job.D->kind) << " dim " << job.D->dim << "\n";
        out << "coefficients-dim: " << job.M->dim << "\n";
    }
    if (job.has_truncation) out << "truncation: " << job.truncation << "\n";
    if (!job.theory.empty()) out << "theory: " << job.theory << "\n";
    out << "spec-hash: " << hex64(fnv1a(job.canonical.dump())) << "\n";
}

template <class F>
void print_machine(std::ostringstream& out, const Job<F>& job,
                   const std::vector<std::size_t>& dims, const char* kind) {
    if (job.output != "json") return;
    json m{{"format", 1},
           {"pipeline", job.pipeline},
           {"kind", kind},
           {"dims", dims},
           {"spec-hash", hex64(fnv1a(job.canonical.dump()))}};
    if (!job.theory.empty()) m["theory"] = job.theory;
    out << "machine: " << m.dump() << "\n";
}

// ---- dense cross-check for --oracle ------------------------------------------

template <class F>
std::size_t dense_rank_of(const Matrix<F>& m) {
    const F& K = m.field();
    std::vector<std::vector<typename F::Value>> a(
        m.rows(), std::vector<typename F::Value>(m.cols(), K.zero()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) a[r][c] = v;
    std::size_t rows = m.rows(), cols = m.cols(), rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && K.is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        auto inv = K.inv(a[rk][c]);
        for (std::size_t cc = c; cc < cols; ++cc) a[rk][cc] = K.mul(a[rk][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk || K.is_zero(a[r][c])) continue;
            auto f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] = K.sub(a[r][cc], K.mul(f, a[rk][cc]));
        }
        ++rk;
    }
    return rk;
}

// Recompute homology dimensions with an independent dense elimination and
// compare against the table the sparse path produced.
template <class F>
void cross_check(std::ostringstream& out, const ChainComplex<F>& C,
                 const std::vector<std::size_t>& reported) {
    std::vector<std::size_t> rk(reported.size());
    for (std::size_t k = 0; k < reported.size(); ++k) rk[k] = dense_rank_of(C.diff[k]);
    for (std::size_t n = 0; n < reported.size(); ++n) {
        std::size_t cycles = n == 0 ? C.dims[0] : C.dims[n] - rk[n - 1];
        if (cycles - rk[n] != reported[n])
            throw CertificationError("dense cross-check disagrees at degree " + std::to_string(n));
    }
    out << "oracle: dense rank cross-check agreed on " << reported.size() << " degrees\n";
}

// ---- pipelines ----------------------------------------------------------------

template <class F>
ParaCyclicModule<F> build_family(const Job<F>& job) {
    auto w = build_transposition(job.D->kind, *job.B, *job.M, *job.D);
    return algebra_kind(job.D->kind) ? build_T_algebra(*job.D, *job.M, w, job.truncation)
                                     : build_T_coalgebra(*job.D, *job.M, w, job.truncation);
}

template <class F>
int run_job(const F& K, const json& doc, const Flags& flags, const std::string& field_name) {
    Job<F> job = parse_job(K, doc, flags, field_name);
    if (flags.emit_spec) {
        std::cout << job.canonical.dump(2) << "\n";
        return 0;
    }
    std::ostringstream out;
    print_header(out, job, field_name);

    if (job.pipeline == "lambda-calc") {
        auto word = parse_word(job.expression, flavor_of(job.flavor));
        auto nf = normal_form(word);
        out << "flavor: " << job.flavor << "\n";
        out << "input: " << display_word(word) << "\n";
        out << "normal-form: " << nf.display() << "\n";
        out << "endpoints: [" << nf.source << "] -> [" << nf.target << "]\n";
        std::cout << out.str();
        return 0;
    }

    if (job.pipeline == "validate") {
        auto vb = validate_bialgebra(*job.B);
        auto vs = validate_symmetry(*job.B, *job.D, *job.M);
        if (!vb.ok() || !vs.ok()) {
            out << "result: invalid\n";
            for (const auto& f : vb.failures) out << "witness: " << f << "\n";
            for (const auto& f : vs.failures) out << "witness: " << f << "\n";
            std::cout << out.str();
            return 2;
        }
        out << "result: all axioms hold\n";
        std::cout << out.str();
        return 0;
    }

    if (job.pipeline == "build") {
        auto T = build_family(job);
        auto rep = certify_relations(T);
        rep.require_ok("relation certification");
        out << "orientation: " << (T.orientation == Orientation::cyclic ? "cyclic" : "cocyclic")
            << "\n";
        out << "certified: " << rep.checked << " relation instances\n";
        if (flags.certify) {
            auto plus = certify_relations(T, CategoryFlavor::LambdaPlus);
            plus.require_ok("simplicial certification");
            out << "certified-plus: " << plus.checked << " relation instances\n";
            out << "twists-cyclic: " << (twists_are_cyclic(T) ? "yes" : "no") << "\n";
        }
        print_table(out, T.dims);
        print_machine(out, job, T.dims, "module");
        std::cout << out.str();
        return 0;
    }

    if (job.pipeline == "approx") {
        auto res = full_pipeline(*job.B, *job.D, *job.M, job.truncation);
        auto rep = certify_relations(res.T, CategoryFlavor::Lambda);
        rep.require_ok("cyclic certification");
        out << "stage: cyclic\n";
        out << "certified: " << rep.checked << " relation instances\n";
        print_table(out, res.T.dims);
        print_machine(out, job, res.T.dims, "module");
        std::cout << out.str();
        return 0;
    }

    if (job.pipeline == "homology") {
        auto T = build_family(job);
        certify_relations(T).require_ok("input family");
        HomologyTable t;
        if (job.theory == "hh")
            t = hochschild_homology(T, job.truncation);
        else if (job.theory == "hc")
            t = cyclic_homology(T, job.truncation);
        else
            t = cocyclic_cohomology(T, job.truncation);
        out << "table: " << theory_name(t.theory) << "\n";
        print_table(out, t.dims);
        if (flags.oracle) {
            if (job.theory == "hh")
                cross_check(out, hochschild_complex(T, job.truncation), t.dims);
            else if (job.theory == "hc")
                cross_check(out, cyclic_total_complex(T, job.truncation), t.dims);
            else
                cross_check(out, cyclic_total_complex(opposite_module(T), job.truncation), t.dims);
        }
        print_machine(out, job, t.dims, "homology");
        std::cout << out.str();
        return 0;
    }

    // hopf-hochschild
    auto t = hopf_hochschild(*job.D, *job.B, *job.M, job.truncation);
    out << "table: " << theory_name(t.theory) << "\n";
    print_table(out, t.dims);
    if (flags.oracle) {
        auto w = build_transposition(job.D->kind, *job.B, *job.M, *job.D);
        auto T = build_T_algebra(*job.D, *job.M, w, job.truncation);
        auto E = equip_diagonal(std::move(T), *job.B, *job.D, *job.M);
        auto co = coinvariants(E, false);
        cross_check(out, hochschild_complex(co.T, job.truncation), t.dims);
    }
    print_machine(out, job, t.dims, "homology");
    std::cout << out.str();
    return 0;
}

int run(const std::string& path, const Flags& flags) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open job file " + path);
    json doc = json::parse(in);
    std::string field_name = "Q";
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) throw FormatError("field must be a string");
        field_name = doc["field"].get<std::string>();
    }
    if (field_name == "Q") {
        Rationals K;
        return run_job(K, doc, flags, field_name);
    }
    if (field_name.size() > 1 && field_name[0] == 'F' &&
        field_name.find_first_not_of("0123456789", 1) == std::string::npos) {
        std::optional<PrimeField> K;
        try {
            K.emplace(std::stoull(field_name.substr(1)));
        } catch (const ConfigurationError& e) {
            throw FormatError(e.what());
        } catch (const std::out_of_range&) {
            throw FormatError("bad field spec '" + field_name + "'");
        }
        return run_job(*K, doc, flags, field_name);
    }
    throw FormatError("unknown field '" + field_name + "' (expected Q or F<p>)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact para-cyclic and Hopf-cyclic computations from job files"};
    std::string job_path;
    Flags flags;
    std::size_t degree = 0;
    std::string theory, flavor, pipeline, expression, output;
    app.add_option("job", job_path, "job file to run")->required();
    auto* od = app.add_option("--degree", degree, "override the truncation");
    auto* ot = app.add_option("--theory", theory, "homology theory")
                   ->check(CLI::IsMember(kTheories));
    auto* of = app.add_option("--flavor", flavor, "word flavor")->check(CLI::IsMember(kFlavors));
    auto* op = app.add_option("--pipeline", pipeline, "override the pipeline")
                   ->check(CLI::IsMember(kPipelines));
    auto* oe = app.add_option("--expression", expression, "lambda-calc expression");
    auto* oo = app.add_option("--output", output, "report mode")
                   ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
    app.add_flag("--certify", flags.certify, "run the full relation suites");
    app.add_flag("--oracle", flags.oracle, "run dense brute-force cross-checks");
    app.add_flag("--emit-spec", flags.emit_spec, "print the canonical job spec and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 4;
    }
    if (od->count()) flags.degree = degree;
    if (ot->count()) flags.theory = theory;
    if (of->count()) flags.flavor = flavor;
    if (op->count()) flags.pipeline = pipeline;
    if (oe->count()) flags.expression = expression;
    if (oo->count()) flags.output = output;

    try {
        return run(job_path, flags);
    } catch (const ValidationError& e) {
        std::cout << "validation failure:\n" << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cout << "certification failure:\n" << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cout << "format error: " << e.what() << "\n";
        return 4;
    } catch (const CompositionError& e) {
        std::cout << "format error: " << e.what() << "\n";
        return 4;
    } catch (const RangeError& e) {
        std::cout << "format error: " << e.what() << "\n";
        return 4;
    } catch (const json::exception& e) {
        std::cout << "format error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cout << "validation failure:\n" << e.what() << "\n";
        return 2;
    }
}
