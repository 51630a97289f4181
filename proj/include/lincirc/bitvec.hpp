#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lincirc
{

/* Fixed-length bit vector packed into 64-bit words.  Unused high bits of the
 * last word are kept zero, so word-wise comparisons and popcounts are exact. */
class BitVec
{
public:
  BitVec() = default;

  explicit BitVec( std::size_t size )
      : size_( size ), words_( ( size + 63u ) / 64u, 0u )
  {
  }

  std::size_t size() const { return size_; }

  bool test( std::size_t i ) const
  {
    assert( i < size_ );
    return ( words_[i >> 6u] >> ( i & 63u ) ) & 1u;
  }

  void set( std::size_t i, bool value = true )
  {
    assert( i < size_ );
    if ( value )
      words_[i >> 6u] |= uint64_t( 1 ) << ( i & 63u );
    else
      words_[i >> 6u] &= ~( uint64_t( 1 ) << ( i & 63u ) );
  }

  void clear()
  {
    for ( auto& w : words_ )
      w = 0u;
  }

  std::size_t count() const
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += std::popcount( w );
    return c;
  }

  bool none() const
  {
    for ( auto w : words_ )
      if ( w != 0u )
        return false;
    return true;
  }

  bool any() const { return !none(); }

  BitVec& operator|=( const BitVec& other )
  {
    assert( size_ == other.size_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] |= other.words_[i];
    return *this;
  }

  BitVec& operator&=( const BitVec& other )
  {
    assert( size_ == other.size_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] &= other.words_[i];
    return *this;
  }

  BitVec& operator^=( const BitVec& other )
  {
    assert( size_ == other.size_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] ^= other.words_[i];
    return *this;
  }

  bool intersects( const BitVec& other ) const
  {
    assert( size_ == other.size_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & other.words_[i] )
        return true;
    return false;
  }

  bool is_subset_of( const BitVec& other ) const
  {
    assert( size_ == other.size_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~other.words_[i] )
        return false;
    return true;
  }

  /* Calls fn( index ) for every set bit, in increasing order. */
  template<typename Fn>
  void for_each_set( Fn&& fn ) const
  {
    for ( std::size_t wi = 0; wi < words_.size(); ++wi )
    {
      uint64_t w = words_[wi];
      while ( w )
      {
        fn( ( wi << 6u ) + std::countr_zero( w ) );
        w &= w - 1;
      }
    }
  }

  friend bool operator==( const BitVec& a, const BitVec& b )
  {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  friend bool operator!=( const BitVec& a, const BitVec& b ) { return !( a == b ); }

  const std::vector<uint64_t>& words() const { return words_; }

private:
  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

} // namespace lincirc
