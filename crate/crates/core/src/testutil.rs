/// Every word of length `n` over the first `sigma` lowercase letters.
pub fn all_words(n: usize, sigma: u8) -> impl Iterator<Item = Vec<u8>> {
    let total = (sigma as usize).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = b'a' + (code % sigma as usize) as u8;
                code /= sigma as usize;
                c
            })
            .collect()
    })
}
