#include "sumlab/bitvec.hpp"

#include <cassert>

namespace sumlab {

namespace {

// Reads 64 bits of v starting at bit offset off (off need not be aligned);
// bits past the end of v read as zero.
inline std::uint64_t read_window(const std::vector<std::uint64_t>& w, std::uint64_t nbits,
                                 std::uint64_t off) {
    std::size_t wi = off >> 6;
    unsigned sh = off & 63;
    std::uint64_t lo = wi < w.size() ? w[wi] : 0;
    if (sh == 0) return lo;
    std::uint64_t hi = wi + 1 < w.size() ? w[wi + 1] : 0;
    (void)nbits;
    return (lo >> sh) | (hi << (64 - sh));
}

// Writes the low `count` bits of bits into w at bit offset off.
inline void write_bits(std::vector<std::uint64_t>& w, std::uint64_t off, std::uint64_t bits,
                       unsigned count) {
    if (count == 0) return;
    std::uint64_t mask = count == 64 ? ~0ULL : ((1ULL << count) - 1);
    bits &= mask;
    std::size_t wi = off >> 6;
    unsigned sh = off & 63;
    w[wi] = (w[wi] & ~(mask << sh)) | (bits << sh);
    if (sh + count > 64) {
        unsigned spill = sh + count - 64;
        std::uint64_t hmask = (1ULL << spill) - 1;
        w[wi + 1] = (w[wi + 1] & ~hmask) | (bits >> (64 - sh));
    }
}

} // namespace

void BitVec::copy_bits_from(const BitVec& src, std::uint64_t src_off, std::uint64_t dst_off,
                            std::uint64_t len) {
    assert(this != &src);
    std::uint64_t done = 0;
    while (done < len) {
        unsigned chunk = static_cast<unsigned>(len - done < 64 ? len - done : 64);
        std::uint64_t bits = read_window(src.w_, src.nbits_, src_off + done);
        write_bits(w_, dst_off + done, bits, chunk);
        done += chunk;
    }
}

void BitVec::rotate_range(std::uint64_t first, std::uint64_t len, std::uint64_t shift,
                          BitVec& scratch) {
    if (len <= 1) return;
    shift %= len;
    if (shift == 0) return;
    if (scratch.size() < len) scratch = BitVec(len);
    // new[(i + shift) mod len] = old[i]:
    //   scratch[shift .. len)  = old[0 .. len-shift)
    //   scratch[0 .. shift)    = old[len-shift .. len)
    scratch.copy_bits_from(*this, first, shift, len - shift);
    scratch.copy_bits_from(*this, first + (len - shift), 0, shift);
    copy_bits_from(scratch, 0, first, len);
}

} // namespace sumlab
