/* the ten curves of largest conductor, with their amiability label */
#ifndef FAVOR7_TEST_TABLE_ROWS_HPP_
#define FAVOR7_TEST_TABLE_ROWS_HPP_

namespace table {

struct Row {
    char const* poly;
    char const* N;
    char const* label;
};

inline constexpr Row rows[10] = {
    {"4x^7 - 12x^6 - 4x^5 - 4x^4 - 12x^3 - 8x^2 + 1", "9936420433", "f6"},
    {"4x^7 - 8x^5 - 20x^4 + 16x^3 + 48x^2 + 28x + 5", "9942023503", "f4"},
    {"4x^7 + 8x^6 - 12x^5 - 28x^4 - 8x^3 + 28x^2 + 24x + 5", "9946958657", "f6"},
    {"4x^7 - 16x^6 + 28x^5 - 16x^4 - 12x^3 + 16x^2 + 4x - 3", "9950037247", "Z"},
    {"4x^7 + 12x^5 - 4x^4 - 20x^3 + 20x^2 - 8x + 1", "9951742121", "f6"},
    {"4x^7 + 12x^6 + 28x^5 + 36x^4 + 32x^3 + 16x^2 - 4x + 1", "9959376079", "f4"},
    {"4x^7 + 4x^6 - 8x^5 + 4x^4 + 4x^3 - 24x^2 + 24x - 7", "9979868599", "f6"},
    {"4x^7 - 8x^6 + 20x^5 - 36x^4 - 16x^3 + 52x^2 + 4x - 15", "9984318889", "f4"},
    {"4x^7 + 8x^6 - 4x^5 - 16x^4 + 8x^3 - 4x^2 + 1", "9988954033", "f4"},
    {"4x^7 + 20x^5 + 12x^4 + 16x^3 + 32x^2 - 16x - 7", "9988955521", "f4"},
};

}  // namespace table

#endif
