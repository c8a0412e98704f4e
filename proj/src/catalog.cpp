#include <mutex>

#include "aont/error.hpp"
#include "aont/linear.hpp"

namespace aont {

namespace {

// Matrices are stored in the text file format so the embedded catalog and
// on-disk matrices go through the same parser.
const CatalogEntry kEntries[] = {
    {{2, 3, 4, 2}, R"(2 2 1 0 1
4 4
1 0 0 1
0 1 0 1
0 0 1 1
1 1 1 0
)"},
    {{2, 4, 5, 2}, R"(2 2 1 0 1
5 5
1 1 1 0 1
1 0 0 1 0
0 1 0 1 0
0 0 1 1 0
0 0 0 0 1
)"},
    {{2, 5, 8, 2}, R"(2 2 1 0 1
8 8
1 1 1 0 0 0 1 1
1 1 0 1 0 1 1 0
1 0 1 0 1 1 0 0
1 0 0 1 1 0 1 0
0 1 1 0 1 0 1 0
0 1 0 1 1 0 0 1
0 0 1 1 0 1 1 1
0 0 0 0 1 1 1 1
)"},
    {{2, 6, 10, 2}, R"(2 2 1 0 1
10 10
1 1 0 1 0 0 0 1 1 1
1 1 0 0 1 1 0 0 1 0
1 0 1 1 0 1 0 1 0 0
1 0 1 0 1 0 1 1 1 0
1 0 0 1 1 1 1 0 0 1
0 1 1 1 0 1 1 0 1 0
0 1 1 0 1 1 0 1 0 1
0 1 0 1 1 0 1 1 0 0
0 0 1 1 1 0 0 0 1 1
0 0 0 0 0 1 1 1 1 1
)"},
    {{2, 7, 12, 2}, R"(2 2 1 0 1
12 12
1 1 1 0 0 0 1 0 0 1 0 1
1 1 0 1 0 0 0 1 1 1 1 0
1 1 0 0 1 1 0 0 1 0 0 1
1 0 1 1 0 1 0 1 0 0 0 1
1 0 1 0 1 0 1 1 1 0 1 0
1 0 0 1 1 1 1 0 0 1 1 0
0 1 1 1 0 1 1 0 1 0 1 0
0 1 1 0 1 1 0 1 0 1 1 0
0 1 0 1 1 0 1 1 0 0 0 1
0 0 1 1 1 0 0 0 1 1 0 1
0 0 0 0 0 1 1 1 1 1 0 1
0 0 0 0 0 0 0 0 0 0 1 1
)"},
    {{2, 8, 13, 2}, R"(2 2 1 0 1
13 13
1 1 1 0 0 0 1 0 0 1 0 1 0
1 1 0 1 0 0 0 1 1 1 1 0 0
1 1 0 0 1 1 0 0 1 0 0 1 1
1 0 1 1 0 1 0 1 0 0 0 1 1
1 0 1 0 1 0 1 1 1 0 1 0 1
1 0 0 1 1 1 1 0 0 1 1 0 0
0 1 1 1 0 1 1 0 1 0 1 0 1
0 1 1 0 1 1 0 1 0 1 1 0 0
0 1 0 1 1 0 1 1 0 0 0 1 1
0 0 1 1 1 0 0 0 1 1 0 1 0
0 0 0 0 0 1 1 1 1 1 0 1 0
0 0 0 0 0 0 0 0 0 0 1 1 0
0 0 0 0 0 0 0 0 0 0 0 0 1
)"},
    {{2, 3, 6, 3}, R"(3 3 1 0 1
6 6
0 1 1 1 1 1
1 0 1 1 2 2
1 1 0 2 1 2
1 1 2 0 2 1
1 2 1 2 0 1
1 2 2 1 1 0
)"},
    {{2, 4, 8, 3}, R"(3 3 1 0 1
8 8
0 0 0 1 1 1 1 2
0 1 1 0 1 2 2 0
0 1 1 1 0 0 1 1
1 0 1 0 1 0 1 2
1 0 1 1 0 1 2 0
1 1 0 2 2 0 1 0
1 1 2 0 1 1 2 1
1 2 0 1 0 2 1 1
)"},
    {{2, 5, 9, 3}, R"(3 3 1 0 1
9 9
0 0 0 0 0 0 0 1 1
0 0 0 1 1 1 1 1 1
0 1 1 0 0 1 1 1 2
0 1 1 1 2 0 2 2 0
1 0 1 0 1 0 2 2 1
1 0 1 1 0 2 1 2 0
1 1 0 2 0 0 1 2 1
1 1 2 0 1 1 2 1 0
1 2 0 1 2 1 1 2 0
)"},
    {{2, 6, 13, 3}, R"(3 3 1 0 1
13 13
0 0 0 0 0 0 0 1 1 1 1 1 2
0 0 0 1 1 1 1 0 1 1 1 2 2
0 1 1 0 0 1 1 0 1 1 2 2 0
0 1 1 1 1 0 0 1 1 1 0 1 1
0 1 1 1 2 1 2 1 0 0 1 2 2
1 0 1 0 2 1 1 2 0 2 0 1 2
1 0 1 1 0 0 2 0 1 2 2 1 2
1 0 1 1 1 2 0 2 2 0 1 2 0
1 1 0 2 0 2 0 1 1 2 2 2 2
1 1 2 0 1 1 0 0 2 1 2 1 2
1 1 2 0 2 0 2 2 1 0 1 1 1
1 2 0 1 2 0 1 1 0 1 2 2 0
1 2 0 2 1 1 2 0 1 0 0 2 1
)"},
    {{2, 3, 6, 4}, R"(4 2 2 1 1 1
6 6
0 0 1 1 1 1
0 1 0 1 1 2
1 0 0 1 2 1
1 1 1 0 1 3
1 2 3 0 1 2
1 3 2 1 0 2
)"},
    {{2, 4, 9, 4}, R"(4 2 2 1 1 1
9 9
0 0 0 0 1 1 1 1 1
0 1 1 1 0 1 1 1 2
0 1 1 1 1 0 1 2 1
1 0 1 2 0 1 2 3 1
1 0 1 2 1 0 3 1 2
1 1 0 3 0 2 1 1 1
1 1 2 0 3 3 2 1 3
1 2 0 3 1 0 1 3 2
1 2 3 0 2 1 1 3 3
)"},
    {{2, 5, 11, 4}, R"(4 2 2 1 1 1
11 11
0 0 0 0 0 1 1 1 1 1 1
0 0 0 0 1 1 1 1 1 1 1
0 1 1 1 0 0 1 1 1 1 2
0 1 1 1 1 1 0 1 1 2 3
1 0 1 2 0 1 0 1 2 3 1
1 0 1 2 1 0 1 1 3 2 1
1 1 0 3 0 1 1 2 3 1 3
1 1 2 0 3 0 2 1 3 3 2
1 2 0 3 3 0 0 1 2 3 3
1 2 3 0 2 1 0 2 1 3 3
1 3 2 1 1 2 1 0 3 2 3
)"},
    {{2, 3, 8, 5}, R"(5 5 1 0 1
8 8
0 1 1 1 1 1 1 1
0 1 1 1 1 2 2 4
1 0 1 2 3 2 4 1
1 0 1 2 4 3 1 2
1 1 0 3 2 1 3 4
1 1 0 3 4 4 2 2
1 2 3 0 1 3 2 1
1 2 3 0 1 4 1 4
)"},
    {{2, 4, 10, 5}, R"(5 5 1 0 1
10 10
0 0 0 0 0 0 1 1 1 1
0 1 1 1 1 1 0 1 1 1
0 1 1 1 1 4 1 0 1 2
1 0 1 2 3 1 0 1 4 2
1 0 1 2 3 4 1 0 2 1
1 1 0 3 4 2 0 1 2 2
1 1 0 3 4 3 2 2 1 4
1 2 3 0 1 1 1 4 3 4
1 2 3 0 1 4 4 3 1 2
1 3 4 1 0 2 2 2 2 3
)"},
    {{2, 3, 8, 7}, R"(7 7 1 0 1
8 8
0 0 0 0 1 1 1 1
0 1 1 1 0 1 1 1
1 0 1 2 0 1 2 3
1 1 0 3 1 1 2 4
1 2 3 5 3 0 1 3
1 3 4 6 6 0 1 2
1 4 5 0 5 2 5 1
1 5 6 4 2 3 0 1
)"},
};

std::vector<LinearAont> load_catalog() {
    std::vector<LinearAont> out;
    out.reserve(std::size(kEntries));
    for (const auto& e : kEntries) {
        try {
            MatrixGF m = matrix_from_string(e.text);
            if (m.n_rows != e.params.s || m.field->q != e.params.q)
                raise(Errc::corrupt_catalog, "catalog entry dimensions disagree with its parameters");
            out.push_back(make_linear_aont(e.params.ti, e.params.to, std::move(m)));
        } catch (const Error& err) {
            raise(Errc::corrupt_catalog,
                  "catalog entry (" + std::to_string(e.params.ti) + "," + std::to_string(e.params.to) +
                      "," + std::to_string(e.params.s) + "," + std::to_string(e.params.q) +
                      ") failed certification: " + err.what());
        }
    }
    return out;
}

} // namespace

const std::vector<LinearAont>& catalog() {
    static const std::vector<LinearAont> entries = load_catalog();
    return entries;
}

std::optional<LinearAont> catalog_lookup(std::uint32_t ti, std::uint32_t to, std::uint32_t s,
                                         std::uint32_t q) {
    for (const auto& a : catalog())
        if (a.params.ti == ti && a.params.to == to && a.params.s == s && a.params.q == q) return a;
    return std::nullopt;
}

} // namespace aont
