#pragma once

#include <string>
#include <vector>

#include "pkla/errors.hpp"
#include "pkla/json_io.hpp"

namespace pkla {

namespace detail {

using SymRow = std::vector<const char*>;
using SymMat = std::vector<SymRow>;

inline Json sym_matrix_json(const std::string& name, const SymMat& m) {
    Json j;
    j["name"] = name;
    j["rows"] = static_cast<int>(m.size());
    j["cols"] = static_cast<int>(m.front().size());
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const char* e : r) row.push_back(std::string(e));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

inline Json display_json(const std::string& label,
                         const std::vector<std::pair<std::string, SymMat>>& mats) {
    Json j;
    j["label"] = label;
    Json arr = Json::array();
    for (const auto& [name, m] : mats) arr.push_back(sym_matrix_json(name, m));
    j["matrices"] = arr;
    return j;
}

}  // namespace detail

/// The exact six- and eight-dimensional classification tables, transcribed
/// verbatim (entries are lowest-terms integers or the display's symbols).
/// `dim` is 6 or 8; `kase` is "noniso" (last basis vector non-isotropic) or
/// "iso" (isotropic case).  Note: the displayed x-entries of the neutral t1
/// matrices in `8d_iso_neutral_t1_D23` are transcribed as printed, which
/// differs from the shape the construction routines emit (see README).
inline Json catalog_tables(int dim, const std::string& kase) {
    using detail::SymMat;
    if ((dim != 6 && dim != 8) || (kase != "iso" && kase != "noniso"))
        throw SchemaError("catalog: dim must be 6 or 8 and case must be iso or noniso");
    Json out;
    out["dim"] = dim;
    out["case"] = kase;
    Json displays = Json::array();

    if (dim == 6 && kase == "noniso") {
        SymMat d20 = {{"0", "lambda1", "0", "0", "0"},
                      {"-lambda1", "0", "0", "0", "0"},
                      {"0", "0", "0", "lambda2", "0"},
                      {"0", "0", "-lambda2", "0", "0"},
                      {"0", "0", "0", "0", "a"}};
        SymMat g_id4 = {{"1", "0", "0", "0"},
                        {"0", "1", "0", "0"},
                        {"0", "0", "1", "0"},
                        {"0", "0", "0", "1"}};
        SymMat d11I = {{"0", "lambda", "1", "0", "0"},
                       {"-lambda", "0", "0", "1", "0"},
                       {"0", "0", "0", "lambda", "0"},
                       {"0", "0", "-lambda", "0", "0"},
                       {"0", "0", "0", "0", "a"}};
        SymMat g_pair4 = {{"0", "0", "0", "1"},
                          {"0", "0", "-1", "0"},
                          {"0", "-1", "0", "0"},
                          {"1", "0", "0", "0"}};
        SymMat g_split4 = {{"1", "0", "0", "0"},
                           {"0", "1", "0", "0"},
                           {"0", "0", "-1", "0"},
                           {"0", "0", "0", "-1"}};
        SymMat d11III = {{"rho", "lambda", "0", "0", "0"},
                         {"-lambda", "rho", "0", "0", "0"},
                         {"0", "0", "-rho", "lambda", "0"},
                         {"0", "0", "-lambda", "-rho", "0"},
                         {"0", "0", "0", "0", "a"}};
        displays.push_back(detail::display_json("6d_noniso_(2,0)", {{"D", d20}, {"g(t)", g_id4}}));
        displays.push_back(detail::display_json("6d_noniso_(1,1)-I", {{"D", d11I}, {"g(t)", g_pair4}}));
        displays.push_back(detail::display_json("6d_noniso_(1,1)-II", {{"D", d20}, {"g(t)", g_split4}}));
        displays.push_back(detail::display_json("6d_noniso_(1,1)-III", {{"D", d11III}, {"g(t)", g_pair4}}));
    } else if (dim == 6 && kase == "iso") {
        SymMat d1 = {{"-1", "0", "0", "0", "0"},
                     {"0", "-1", "0", "0", "c2"},
                     {"0", "0", "0", "lambda", "0"},
                     {"0", "0", "-lambda", "0", "0"},
                     {"0", "0", "0", "0", "1"}};
        SymMat d4 = {{"0", "0", "0", "0", "c1"},
                     {"0", "0", "0", "0", "1"},
                     {"0", "0", "0", "lambda", "0"},
                     {"0", "0", "-lambda", "0", "0"},
                     {"0", "0", "0", "0", "0"}};
        SymMat d5 = {{"0", "0", "0", "0", "1"},
                     {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "lambda", "0"},
                     {"0", "0", "-lambda", "0", "0"},
                     {"0", "0", "0", "0", "0"}};
        SymMat d6 = {{"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "lambda", "0"},
                     {"0", "0", "-lambda", "0", "0"},
                     {"0", "0", "0", "0", "0"}};
        SymMat d2 = {{"0", "0", "0", "-1", "0"},
                     {"0", "0", "1", "0", "0"},
                     {"0", "0", "0", "0", "1"},
                     {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"}};
        SymMat d3 = {{"0", "0", "0", "-x", "0"},
                     {"0", "0", "x", "0", "1"},
                     {"0", "0", "0", "0", "x"},
                     {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"}};
        displays.push_back(detail::display_json(
            "6d_iso_D1456", {{"D1", d1}, {"D4", d4}, {"D5", d5}, {"D6", d6}}));
        displays.push_back(detail::display_json("6d_iso_D23", {{"D2", d2}, {"D3", d3}}));
    } else if (dim == 8 && kase == "noniso") {
        SymMat d30 = {{"0", "lambda1", "0", "0", "0", "0", "0"},
                      {"-lambda1", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "lambda2", "0", "0", "0"},
                      {"0", "0", "-lambda2", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "lambda3", "0"},
                      {"0", "0", "0", "0", "-lambda3", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "a"}};
        SymMat g_id6 = {{"1", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "0"},
                        {"0", "0", "1", "0", "0", "0"},
                        {"0", "0", "0", "1", "0", "0"},
                        {"0", "0", "0", "0", "1", "0"},
                        {"0", "0", "0", "0", "0", "1"}};
        SymMat d21I = {{"0", "lambda1", "1", "0", "0", "0", "0"},
                       {"-lambda1", "0", "0", "1", "0", "0", "0"},
                       {"0", "0", "0", "lambda1", "0", "0", "0"},
                       {"0", "0", "-lambda1", "0", "0", "0", "0"},
                       {"0", "0", "0", "0", "0", "lambda2", "0"},
                       {"0", "0", "0", "0", "-lambda2", "0", "0"},
                       {"0", "0", "0", "0", "0", "0", "a"}};
        SymMat g_pair_id = {{"0", "0", "0", "1", "0", "0"},
                            {"0", "0", "-1", "0", "0", "0"},
                            {"0", "-1", "0", "0", "0", "0"},
                            {"1", "0", "0", "0", "0", "0"},
                            {"0", "0", "0", "0", "1", "0"},
                            {"0", "0", "0", "0", "0", "1"}};
        SymMat g_split6 = {{"1", "0", "0", "0", "0", "0"},
                           {"0", "1", "0", "0", "0", "0"},
                           {"0", "0", "1", "0", "0", "0"},
                           {"0", "0", "0", "1", "0", "0"},
                           {"0", "0", "0", "0", "-1", "0"},
                           {"0", "0", "0", "0", "0", "-1"}};
        SymMat d21III = {{"rho1", "lambda1", "0", "0", "0", "0", "0"},
                         {"-lambda1", "rho1", "0", "0", "0", "0", "0"},
                         {"0", "0", "-rho1", "lambda1", "0", "0", "0"},
                         {"0", "0", "-lambda1", "-rho1", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "lambda2", "0"},
                         {"0", "0", "0", "0", "-lambda2", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "a"}};
        SymMat d21IV = {{"0", "lambda", "1", "0", "0", "0", "0"},
                        {"-lambda", "0", "0", "1", "0", "0", "0"},
                        {"0", "0", "0", "lambda", "1", "0", "0"},
                        {"0", "0", "-lambda", "0", "0", "1", "0"},
                        {"0", "0", "0", "0", "0", "lambda", "0"},
                        {"0", "0", "0", "0", "-lambda", "0", "0"},
                        {"0", "0", "0", "0", "0", "0", "a"}};
        SymMat g_IV = {{"0", "0", "0", "0", "-1", "0"},
                       {"0", "0", "0", "0", "0", "-1"},
                       {"0", "0", "1", "0", "0", "0"},
                       {"0", "0", "0", "1", "0", "0"},
                       {"-1", "0", "0", "0", "0", "0"},
                       {"0", "-1", "0", "0", "0", "0"}};
        displays.push_back(detail::display_json("8d_noniso_(3,0)", {{"D", d30}, {"g(t)", g_id6}}));
        displays.push_back(detail::display_json("8d_noniso_(2,1)-I", {{"D", d21I}, {"g(t)", g_pair_id}}));
        displays.push_back(detail::display_json("8d_noniso_(2,1)-II", {{"D", d30}, {"g(t)", g_split6}}));
        displays.push_back(detail::display_json("8d_noniso_(2,1)-III", {{"D", d21III}, {"g(t)", g_pair_id}}));
        displays.push_back(detail::display_json("8d_noniso_(2,1)-IV", {{"D", d21IV}, {"g(t)", g_IV}}));
    } else {  // dim == 8, iso
        SymMat p_d2_1x2 = {{"0", "0", "0", "-1", "0", "-x2", "0"},
                           {"0", "0", "1", "0", "x2", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "x2"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat p_d2_01 = {{"0", "0", "0", "0", "0", "-1", "0"},
                          {"0", "0", "0", "0", "1", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "1"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat p_d3 = {{"0", "0", "0", "-x1", "0", "-x2", "0"},
                       {"0", "0", "x1", "0", "x2", "0", "1"},
                       {"0", "0", "0", "0", "0", "0", "x1"},
                       {"0", "0", "0", "0", "0", "0", "0"},
                       {"0", "0", "0", "0", "0", "0", "x2"},
                       {"0", "0", "0", "0", "0", "0", "0"},
                       {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t1_d2 = {{"0", "0", "0", "0", "0", "x", "0"},
                        {"0", "0", "0", "0", "-x", "0", "0"},
                        {"0", "0", "0", "0", "1", "0", "0"},
                        {"0", "0", "0", "0", "0", "1", "0"},
                        {"0", "0", "0", "0", "0", "0", "x"},
                        {"0", "0", "0", "0", "0", "0", "0"},
                        {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t1_d3 = {{"0", "0", "0", "0", "0", "x", "0"},
                        {"0", "0", "0", "0", "-x", "0", "1"},
                        {"0", "0", "0", "0", "1", "0", "0"},
                        {"0", "0", "0", "0", "0", "1", "0"},
                        {"0", "0", "0", "0", "0", "0", "x"},
                        {"0", "0", "0", "0", "0", "0", "0"},
                        {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2I_d2 = {{"0", "0", "0", "-1", "0", "0", "0"},
                         {"0", "0", "1", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "1"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2I_d3 = {{"0", "0", "0", "-x+", "0", "0", "0"},
                         {"0", "0", "x+", "0", "0", "0", "1"},
                         {"0", "0", "0", "0", "0", "0", "x+"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2II_d2 = {{"0", "0", "0", "0", "0", "1", "0"},
                          {"0", "0", "0", "0", "-1", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "1"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2II_d3 = {{"0", "0", "0", "0", "0", "x-", "0"},
                          {"0", "0", "0", "0", "-x-", "0", "1"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "x-"},
                          {"0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2III_d2 = {{"0", "0", "0", "-1", "0", "1", "0"},
                           {"0", "0", "1", "0", "-1", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "0"}};
        SymMat t2III_d3 = {{"0", "0", "0", "-1", "0", "1", "0"},
                           {"0", "0", "1", "0", "-1", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "1"},
                           {"0", "0", "0", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "0", "0", "0"}};
        displays.push_back(detail::display_json(
            "8d_iso_positive_D2", {{"D2(t0,(1,x2))", p_d2_1x2}, {"D2(t0,(0,1))", p_d2_01}}));
        displays.push_back(
            detail::display_json("8d_iso_positive_D3", {{"D3(t0,(x1,x2))", p_d3}}));
        displays.push_back(detail::display_json(
            "8d_iso_neutral_t1_D23", {{"D2(t1,x)", t1_d2}, {"D3(t1,x)", t1_d3}}));
        displays.push_back(detail::display_json(
            "8d_iso_neutral_t2_D23_I", {{"D2(t2,(1,0))", t2I_d2}, {"D3(t2,(x+,0))", t2I_d3}}));
        displays.push_back(detail::display_json(
            "8d_iso_neutral_t2_D23_II", {{"D2(t2,(0,1))", t2II_d2}, {"D3(t2,(0,x-))", t2II_d3}}));
        displays.push_back(detail::display_json(
            "8d_iso_neutral_t2_D23_III", {{"D2(t2,(1,1))", t2III_d2}, {"D3(t2,(1,1))", t2III_d3}}));
    }
    out["displays"] = displays;
    return out;
}

/// Rendering used both by the command-line tool and the golden files:
/// two-space indent plus a trailing newline.
inline std::string catalog_text(int dim, const std::string& kase) {
    return catalog_tables(dim, kase).dump(2) + "\n";
}

}  // namespace pkla
