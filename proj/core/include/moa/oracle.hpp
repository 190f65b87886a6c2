#pragma once

#include "moa/array.hpp"
#include "moa/op_pair.hpp"

namespace moa::oracle {

// Naive index-space products used as ground truth for the kernel. Every
// element is located through row_major_offset on a full multi-index; no
// strides or loop plans are shared with the kernel.

/// D[u ++ v] = fold_p reduce(identity, combine(A[u ++ p], B[p ++ v])), p ascending.
MoaArray inner(const MoaArray& a, const MoaArray& b, const OpPair& ops = {});

/// C[u ++ v] = combine(A[u], B[v]).
MoaArray outer(const MoaArray& a, const MoaArray& b, const OpPair& ops = {});

/// Odometer over every full index of shape, last axis fastest. Returns false
/// (and leaves idx untouched) once the last index has been passed. Starts
/// from all zeros; an empty shape has no indices.
bool next_index(IndexVector& idx, const Shape& shape);

} // namespace moa::oracle
