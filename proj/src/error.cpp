/*
 * Copyright 2026 The efkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "efkit/error.hpp"

namespace efk {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::DuplicateVertexId: return "DuplicateVertexId";
    case Errc::MissingColor: return "MissingColor";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Malformed: return "Malformed";
    case Errc::GrayCollision: return "GrayCollision";
    case Errc::NotMultipleOfThree: return "NotMultipleOfThree";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::PositionLimitExceeded: return "PositionLimitExceeded";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NotDistinguishable: return "NotDistinguishable";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::ParseError: return "ParseError";
    case Errc::Colored: return "Colored";
    case Errc::TooSmall: return "TooSmall";
    case Errc::RankTooLow: return "RankTooLow";
    case Errc::NotATree: return "NotATree";
    }
    return "Unknown";
}

} // namespace efk
