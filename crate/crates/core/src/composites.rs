pub fn _placeholder_composites() {}
