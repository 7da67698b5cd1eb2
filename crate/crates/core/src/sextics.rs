pub struct TernarySextic<T>(pub std::marker::PhantomData<T>);
