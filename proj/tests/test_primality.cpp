#include <catch2/catch_amalgamated.hpp>

#include "geodex/arithmetic.hpp"
#include "geodex/primality.hpp"

using namespace geodex;

TEST_CASE("primality on classified small and adversarial inputs") {
    // primes
    for (const char* p : {"2", "3", "5", "97", "101", "21523361", "2305843009213693951",
                          "618970019642690137449562111", "1000000000000000009",
                          "1000000000000000000000007", "1000000000000000000000000000057"})
        CHECK(is_probable_prime_bpsw(BigInt(p)));

    // composites, including strong base-2 pseudoprimes (2047, 3277, 4033),
    // Lucas-side pseudoprimes (5459, 5777, 10261), Carmichael numbers
    // (561, 1105, 41041, 25326001) and a strong pseudoprime to bases 2..10
    // (3215031751)
    for (const char* c : {"0", "1", "4", "561", "1105", "2047", "3277", "4033", "5459", "5777",
                          "10261", "41041", "25326001", "3215031751", "6750758569"})
        CHECK_FALSE(is_probable_prime_bpsw(BigInt(c)));

    // perfect squares are filtered before the Lucas stage
    BigInt big_square = BigInt("123456789123456789") * BigInt("123456789123456789");
    CHECK_FALSE(is_probable_prime_bpsw(big_square));
}

TEST_CASE("degree-three orders of interest") {
    CHECK(is_probable_prime_bpsw(moore_bound(3, 3) + 1));    // 41
    CHECK(is_probable_prime_bpsw(moore_bound(3, 15) + 1));   // 21523361
    CHECK(is_probable_prime_bpsw(moore_bound(3, 63) + 1));   // ~1.7e30
    CHECK_FALSE(is_probable_prime_bpsw(moore_bound(3, 63)));
    CHECK(std::string(primality_method_name()) == "baillie-psw");
}
