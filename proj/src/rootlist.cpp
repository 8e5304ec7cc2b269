#include "sylv/rootlist.hpp"

#include "sylv/errors.hpp"

namespace sylv {

RootList::RootList(std::vector<Rat> values) : values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i)
        for (size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] == values_[j])
                throw DomainError("duplicate root in list: " + values_[i].str());
}

} // namespace sylv
