#include "halpart/mapping_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace halpart {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

ParseError error_at(std::size_t line, const std::string& what) {
    return ParseError("line " + std::to_string(line) + ": " + what);
}

void require_unique(const std::vector<std::string>& items, std::size_t line, const char* what) {
    std::set<std::string> seen;
    for (const auto& t : items)
        if (!seen.insert(t).second)
            throw error_at(line, std::string("duplicate ") + what + " '" + t + "'");
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

MappingDocument parse_mapping_document(std::string_view text) {
    MappingDocument doc;
    std::set<std::string> seen_x;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;

        if (toks.front() == "X:" || toks.front() == "Y:") {
            auto& slot = toks.front() == "X:" ? doc.x_elements : doc.y_elements;
            if (slot)
                throw error_at(line_no, "repeated " + toks.front() + " header");
            if (!doc.rows.empty())
                throw error_at(line_no, "headers must precede mapping rows");
            toks.erase(toks.begin());
            require_unique(toks, line_no, "element");
            slot = std::move(toks);
            continue;
        }

        // "<x> : <y>..." with the colon either separate or glued to x.
        std::string x;
        std::vector<std::string> image;
        if (toks.size() >= 2 && toks[1] == ":") {
            x = toks[0];
            image.assign(toks.begin() + 2, toks.end());
        } else if (toks[0].size() > 1 && toks[0].back() == ':') {
            x = toks[0].substr(0, toks[0].size() - 1);
            image.assign(toks.begin() + 1, toks.end());
        } else {
            throw error_at(line_no, "expected '<x> : <y1> <y2> ...'");
        }
        if (x.find(':') != std::string::npos ||
            std::any_of(image.begin(), image.end(), [](const auto& y) { return y.find(':') != std::string::npos; }))
            throw error_at(line_no, "unexpected ':'");
        if (!seen_x.insert(x).second)
            throw error_at(line_no, "duplicate row for '" + x + "'");
        require_unique(image, line_no, "image value");
        doc.rows.emplace_back(std::move(x), std::move(image));
    }
    return doc;
}

std::string serialize(const MappingDocument& doc) {
    std::ostringstream out;
    auto header = [&](const char* name, const std::vector<std::string>& items) {
        out << name;
        for (const auto& t : items)
            out << ' ' << t;
        out << '\n';
    };
    if (doc.x_elements)
        header("X:", *doc.x_elements);
    if (doc.y_elements)
        header("Y:", *doc.y_elements);
    for (const auto& [x, image] : doc.rows) {
        out << x << " :";
        for (const auto& y : image)
            out << ' ' << y;
        out << '\n';
    }
    return out.str();
}

FiniteMapping to_mapping(const MappingDocument& doc) {
    std::vector<std::string> xs;
    if (doc.x_elements) {
        xs = *doc.x_elements;
        for (const auto& row : doc.rows)
            if (!contains(xs, row.first))
                throw ParseError("row element '" + row.first + "' is not declared in X");
    } else {
        for (const auto& row : doc.rows)
            xs.push_back(row.first);
    }
    if (xs.empty())
        throw ParseError("mapping has no elements");

    std::vector<std::string> ys;
    if (doc.y_elements) {
        ys = *doc.y_elements;
    }
    for (const auto& row : doc.rows)
        for (const auto& y : row.second)
            if (!contains(ys, y)) {
                if (doc.y_elements)
                    throw ParseError("value '" + y + "' in the image of '" + row.first + "' is not declared in Y");
                ys.push_back(y);
            }

    std::vector<YSubset> images(xs.size());
    try {
        FiniteMapping shape(xs, ys, images);
        for (const auto& [x, image] : doc.rows)
            images[shape.x_index(x)] = shape.y_subset(image);
        return FiniteMapping(std::move(xs), std::move(ys), std::move(images));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

MappingDocument to_document(const FiniteMapping& f) {
    MappingDocument doc;
    doc.x_elements = f.x_labels();
    doc.y_elements = f.y_labels();
    for (std::size_t x = 0; x < f.x_size(); ++x)
        doc.rows.emplace_back(f.x_labels()[x], f.labels_of(f.image(x)));
    return doc;
}

} // namespace halpart
