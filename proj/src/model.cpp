#include "lg/model.hpp"

#include <fstream>
#include <sstream>

#include "lg/errors.hpp"

namespace lg {

VarTable ModelData::model_vars() const { return {var_names, {}}; }

VarTable ModelData::full_vars() const {
    VarTable vt{var_names, {}};
    if (r() == 1) {
        vt.p_names = {"p"};
    } else {
        for (int i = 1; i <= r(); ++i) vt.p_names.push_back("p" + std::to_string(i));
    }
    return vt;
}

void validate_model(ModelData& model, const std::vector<int>& declared_degrees) {
    if (model.var_names.empty()) throw InvalidModel("model has no variables");
    if (model.polys.empty()) throw InvalidModel("model has no polynomials");
    if (model.weights.size() != model.var_names.size())
        throw InvalidModel("weights length does not match variable count");
    for (int w : model.weights)
        if (w <= 0) throw InvalidModel("weights must be positive");

    model.degrees.clear();
    for (std::size_t i = 0; i < model.polys.size(); ++i) {
        int d;
        try {
            d = quasi_degree(model.polys[i], model.weights);
        } catch (const NotQuasiHomogeneous& e) {
            throw NotQuasiHomogeneous("W" + std::to_string(i + 1) + ": " + e.what());
        }
        if (d <= 0) throw InvalidModel("polynomial W" + std::to_string(i + 1) + " has degree 0");
        if (!declared_degrees.empty() && declared_degrees[i] != d)
            throw InvalidModel("declared degree " + std::to_string(declared_degrees[i]) +
                               " for W" + std::to_string(i + 1) +
                               " disagrees with inferred degree " + std::to_string(d));
        model.degrees.push_back(d);
    }
    int ws = 0, ds = 0;
    for (int w : model.weights) ws += w;
    for (int d : model.degrees) ds += d;
    model.calabi_yau = (ws == ds);
}

Poly build_superpotential(const ModelData& model) {
    if (model.r() < 1) throw InvalidModel("superpotential needs at least one polynomial");
    Poly out;
    for (int i = 0; i < model.r(); ++i) {
        for (const auto& t : model.polys[i].terms) {
            Term ext = t;
            ext.m.p.assign(model.r(), 0);
            ext.m.p[i] = 1;
            out.terms.push_back(std::move(ext));
        }
    }
    out.normalize();
    return out;
}

namespace {

Rat parse_rat(const std::string& tok) {
    try {
        Rat r(tok);
        r.canonicalize();
        if (r.get_den() < 1) throw InvalidModel("negative denominator");
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidModel("bad rational '" + tok + "'");
    }
}

}  // namespace

ModelData parse_model_file(const std::string& text) {
    ModelData model;
    std::vector<std::pair<std::string, std::string>> poly_lines;
    std::vector<int> declared_degrees;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto fail = [&](const std::string& msg) {
            throw InvalidModel("line " + std::to_string(lineno) + ": " + msg);
        };
        if (key == "name") {
            std::string rest;
            std::getline(ls, rest);
            auto start = rest.find_first_not_of(" \t");
            model.name = start == std::string::npos ? "" : rest.substr(start);
        } else if (key == "vars") {
            std::string v;
            while (ls >> v) model.var_names.push_back(v);
        } else if (key == "weights") {
            int w;
            while (ls >> w) model.weights.push_back(w);
            if (ls.fail() && !ls.eof()) fail("weights must be integers");
        } else if (key == "degrees") {
            int d;
            while (ls >> d) declared_degrees.push_back(d);
        } else if (key == "poly") {
            std::string pname, eq, rest;
            ls >> pname >> eq;
            if (eq != "=") fail("expected 'poly <name> = <expr>'");
            std::getline(ls, rest);
            poly_lines.emplace_back(pname, rest);
        } else if (key == "group") {
            std::string g;
            ls >> g;
            if (g == "J")
                model.group.kind = GroupKind::J;
            else if (g == "SL")
                model.group.kind = GroupKind::SL;
            else if (g == "MAX")
                model.group.kind = GroupKind::Max;
            else
                fail("unknown group selector '" + g + "'");
        } else if (key == "gen") {
            model.group.kind = GroupKind::Explicit;
            std::vector<Rat> row;
            bool auto_p = false;
            std::string tok;
            while (ls >> tok) {
                if (tok == "auto") {
                    auto_p = true;
                    break;
                }
                row.push_back(parse_rat(tok));
            }
            model.group.generator_rows.push_back(std::move(row));
            model.group.generator_auto_p.push_back(auto_p);
        } else {
            fail("unknown key '" + key + "'");
        }
    }

    VarTable vt = model.model_vars();
    for (auto& [pname, expr] : poly_lines) model.polys.push_back(parse_polynomial(expr, vt));

    validate_model(model, declared_degrees);

    for (std::size_t i = 0; i < model.group.generator_rows.size(); ++i) {
        std::size_t len = model.group.generator_rows[i].size();
        std::size_t n = model.var_names.size(), r = model.polys.size();
        bool auto_p = model.group.generator_auto_p[i];
        if (!(len == n + r && !auto_p) && !(len == n && auto_p))
            throw InvalidModel("gen row " + std::to_string(i + 1) +
                               " must have n+r phases, or n phases followed by 'auto'");
    }
    return model;
}

ModelData load_model_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_model_file(ss.str());
}

}  // namespace lg
