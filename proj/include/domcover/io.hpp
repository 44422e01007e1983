#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domcover/colored.hpp"
#include "domcover/cover.hpp"
#include "domcover/digraph.hpp"
#include "domcover/errors.hpp"

namespace domcover {

namespace detail {

inline std::string read_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace detail

/// Text format: first line n, then n rows of n characters from {0,1};
/// M[u][v] = '1' iff the arc (u,v) is present.
inline void write_tournament(std::ostream& out, const Tournament& t) {
    const int n = t.order();
    out << n << '\n';
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) out << (t.has_arc(u, v) ? '1' : '0');
        out << '\n';
    }
}

inline Tournament read_tournament(std::istream& in) {
    int n = -1;
    {
        std::istringstream head(detail::read_line(in, "vertex count"));
        if (!(head >> n) || n < 0) throw ParseError("first line must be a non-negative vertex count");
        std::string rest;
        if (head >> rest) throw ParseError("first line must hold only the vertex count");
    }
    Digraph g(n);
    for (int u = 0; u < n; ++u) {
        const std::string row = detail::read_line(in, "adjacency row");
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(u) + " must have exactly " +
                             std::to_string(n) + " characters");
        for (int v = 0; v < n; ++v) {
            if (row[v] == '1') g.add_arc(u, v);
            else if (row[v] != '0')
                throw ParseError("row " + std::to_string(u) + " contains a character other than 0/1");
        }
    }
    try {
        return Tournament(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("not a tournament: ") + e.what());
    }
}

/// Text format: "n k", a line of k single-character labels, then n rows
/// of n label characters; the diagonal holds the loop colors.
inline void write_colored(std::ostream& out, const ColoredCompleteDigraph& k) {
    const int n = k.order();
    out << n << ' ' << k.palette_size() << '\n';
    for (int c = 0; c < k.palette_size(); ++c) out << (c ? " " : "") << k.label(c);
    out << '\n';
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) out << k.label(k.color(u, v));
        out << '\n';
    }
}

inline ColoredCompleteDigraph read_colored(std::istream& in) {
    int n = -1, nc = -1;
    {
        std::istringstream head(detail::read_line(in, "header"));
        if (!(head >> n >> nc) || n < 0) throw ParseError("header must be '<n> <colors>'");
    }
    if (nc != 2 && nc != 3) throw ParseError("palette must have 2 or 3 colors");

    std::vector<char> palette;
    {
        std::istringstream labels(detail::read_line(in, "palette labels"));
        std::string tok;
        while (labels >> tok) {
            if (tok.size() != 1) throw ParseError("palette labels must be single characters");
            palette.push_back(tok[0]);
        }
        if (static_cast<int>(palette.size()) != nc)
            throw ParseError("expected " + std::to_string(nc) + " palette labels");
    }

    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        const std::string row = detail::read_line(in, "color row");
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(u) + " must have exactly " +
                             std::to_string(n) + " characters");
        for (int v = 0; v < n; ++v) {
            int c = -1;
            for (int i = 0; i < nc; ++i)
                if (palette[i] == row[v]) c = i;
            if (c < 0)
                throw ParseError("row " + std::to_string(u) + " uses '" + std::string(1, row[v]) +
                                 "' which is not in the palette");
            colors[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(c);
        }
    }
    try {
        return ColoredCompleteDigraph(n, std::move(palette), std::move(colors));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// Certificate JSON: {"d", "n", "parts": [{"color", "vertices"}...],
/// "provenance": [tag...] (optional)}. Vertices serialize sorted.
inline nlohmann::ordered_json cover_to_json(const CoverCertificate& cert) {
    nlohmann::ordered_json j;
    j["d"] = cert.d;
    j["n"] = cert.n;
    j["parts"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json prov = nlohmann::ordered_json::array();
    for (const auto& p : cert.parts) {
        nlohmann::ordered_json part;
        part["color"] = std::string(1, p.color);
        part["vertices"] = p.vertices.to_vector();
        j["parts"].push_back(std::move(part));
        prov.push_back(to_string(p.provenance));
    }
    j["provenance"] = std::move(prov);
    return j;
}

inline CoverCertificate cover_from_json(const nlohmann::json& j) {
    try {
        CoverCertificate cert;
        cert.d = j.at("d").get<int>();
        cert.n = j.at("n").get<int>();
        if (cert.d < 1) throw ParseError("certificate d must be >= 1");
        if (cert.n < 0) throw ParseError("certificate n must be >= 0");

        std::vector<std::string> tags;
        if (j.contains("provenance")) {
            tags = j.at("provenance").get<std::vector<std::string>>();
            if (tags.size() != j.at("parts").size())
                throw ParseError("provenance must have one tag per part");
        }

        std::size_t i = 0;
        for (const auto& jp : j.at("parts")) {
            CoverPart part;
            const auto color = jp.at("color").get<std::string>();
            if (color.size() != 1) throw ParseError("part colors must be single characters");
            part.color = color[0];
            part.vertices = VertexSet(cert.n);
            for (int v : jp.at("vertices").get<std::vector<int>>()) {
                if (v < 0 || v >= cert.n)
                    throw ParseError("part vertex " + std::to_string(v) + " out of range");
                part.vertices.set(v);
            }
            if (i < tags.size()) {
                auto tag = provenance_from_string(tags[i]);
                if (!tag) throw ParseError("unknown provenance tag '" + tags[i] + "'");
                part.provenance = *tag;
            }
            cert.parts.push_back(std::move(part));
            ++i;
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cover certificate: ") + e.what());
    }
}

inline std::string to_text(const Tournament& t) {
    std::ostringstream out;
    write_tournament(out, t);
    return out.str();
}

inline std::string to_text(const ColoredCompleteDigraph& k) {
    std::ostringstream out;
    write_colored(out, k);
    return out.str();
}

inline Tournament tournament_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_tournament(in);
}

inline ColoredCompleteDigraph colored_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_colored(in);
}

}  // namespace domcover
