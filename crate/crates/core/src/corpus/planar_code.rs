//! The `planar_code` interchange format.
//!
//! A stream is an optional header `>>planar_code<<` (or `>>planar_code le<<` /
//! `>>planar_code be<<`), followed by records. A record is the vertex count, then
//! for every vertex its 1-based neighbours in clockwise order, each list ended by 0.
//! Values are single bytes, except that a record whose first byte is 0 uses 16-bit
//! values throughout (little-endian unless the header says `be`).

use crate::plane_graph::{EmbeddingError, PlaneGraph};
use std::io::{self, Read, Write};
use thiserror::Error;

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error)]
pub enum PlanarCodeError {
    #[error("unrecognised planar_code header")]
    BadHeader,
    #[error("record {index} ends early")]
    TruncatedRecord { index: usize },
    #[error("record {index} is not a valid plane graph: {source}")]
    ValidationFailed { index: usize, source: EmbeddingError },
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Endian {
    Little,
    Big,
}

/// Streaming decoder; yields one graph per record.
pub struct PlanarCodeReader<R: Read> {
    inner: R,
    pending: Vec<u8>,
    endian: Endian,
    header_checked: bool,
    index: usize,
    failed: bool,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(inner: R) -> Self {
        PlanarCodeReader {
            inner,
            pending: Vec::new(),
            endian: Endian::Little,
            header_checked: false,
            index: 0,
            failed: false,
        }
    }

    fn byte(&mut self) -> io::Result<Option<u8>> {
        if let Some(b) = self.pending.pop() {
            return Ok(Some(b));
        }
        let mut buf = [0u8; 1];
        loop {
            match self.inner.read(&mut buf) {
                Ok(0) => return Ok(None),
                Ok(_) => return Ok(Some(buf[0])),
                Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                Err(e) => return Err(e),
            }
        }
    }

    fn check_header(&mut self) -> Result<(), PlanarCodeError> {
        self.header_checked = true;
        let first = match self.byte()? {
            Some(b) => b,
            None => return Ok(()),
        };
        let second = self.byte()?;
        if first != b'>' || second != Some(b'>') {
            if let Some(s) = second {
                self.pending.push(s);
            }
            self.pending.push(first);
            return Ok(());
        }
        let mut text = vec![b'>', b'>'];
        while !text.ends_with(b"<<") {
            match self.byte()? {
                Some(b) if text.len() < 32 => text.push(b),
                _ => return Err(PlanarCodeError::BadHeader),
            }
        }
        self.endian = match text.as_slice() {
            b">>planar_code<<" | b">>planar_code le<<" => Endian::Little,
            b">>planar_code be<<" => Endian::Big,
            _ => return Err(PlanarCodeError::BadHeader),
        };
        Ok(())
    }

    fn value(&mut self, wide: bool) -> Result<usize, PlanarCodeError> {
        let truncated = PlanarCodeError::TruncatedRecord { index: self.index };
        let a = self.byte()?.ok_or(truncated)?;
        if !wide {
            return Ok(a as usize);
        }
        let b = self.byte()?.ok_or(PlanarCodeError::TruncatedRecord { index: self.index })?;
        Ok(match self.endian {
            Endian::Little => u16::from_le_bytes([a, b]),
            Endian::Big => u16::from_be_bytes([a, b]),
        } as usize)
    }

    fn record(&mut self) -> Result<Option<PlaneGraph>, PlanarCodeError> {
        if !self.header_checked {
            self.check_header()?;
        }
        let Some(first) = self.byte()? else {
            return Ok(None);
        };
        let (n, wide) = if first == 0 { (self.value(true)?, true) } else { (first as usize, false) };
        let index = self.index;
        let mut rot = Vec::with_capacity(n.min(1 << 16));
        let mut bad = None;
        for v in 0..n {
            let mut list = Vec::new();
            loop {
                let x = self.value(wide)?;
                if x == 0 {
                    break;
                }
                if x > n && bad.is_none() {
                    bad = Some(EmbeddingError::BadNeighbor(v, x - 1));
                }
                list.push(x - 1);
            }
            rot.push(list);
        }
        self.index += 1;
        if let Some(source) = bad {
            return Err(PlanarCodeError::ValidationFailed { index, source });
        }
        PlaneGraph::from_rotation(rot)
            .map(Some)
            .map_err(|source| PlanarCodeError::ValidationFailed { index, source })
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<PlaneGraph, PlanarCodeError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.record() {
            Ok(Some(g)) => Some(Ok(g)),
            Ok(None) => None,
            Err(e) => {
                // a structural error leaves the stream position unknown
                self.failed = !matches!(e, PlanarCodeError::ValidationFailed { .. });
                Some(Err(e))
            }
        }
    }
}

/// Encoder; writes the header on the first graph (or on `finish` for an empty stream).
pub struct PlanarCodeWriter<W: Write> {
    inner: W,
    header_written: bool,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(inner: W) -> Self {
        PlanarCodeWriter { inner, header_written: false }
    }

    fn header(&mut self) -> io::Result<()> {
        if !self.header_written {
            self.inner.write_all(HEADER)?;
            self.header_written = true;
        }
        Ok(())
    }

    pub fn write(&mut self, g: &PlaneGraph) -> io::Result<()> {
        self.header()?;
        self.inner.write_all(&encode_record(g))
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.header()?;
        self.inner.flush()?;
        Ok(self.inner)
    }
}

/// One record without header. Graphs here never exceed 255 vertices.
pub fn encode_record(g: &PlaneGraph) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 2 * g.edge_count() + g.n());
    out.push(g.n() as u8);
    for v in 0..g.n() {
        out.extend(g.rotation(v).iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    out
}

/// Header plus one record per graph.
pub fn encode(graphs: &[PlaneGraph]) -> Vec<u8> {
    let mut w = PlanarCodeWriter::new(Vec::new());
    for g in graphs {
        w.write(g).expect("writing to a Vec");
    }
    w.finish().expect("writing to a Vec")
}

pub fn decode(bytes: &[u8]) -> Result<Vec<PlaneGraph>, PlanarCodeError> {
    PlanarCodeReader::new(bytes).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named::{double_wheel, k4};

    #[test]
    fn k4_record_bytes() {
        let bytes = encode(&[k4()]);
        assert_eq!(&bytes[..15], HEADER);
        assert_eq!(&bytes[15..], &[4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]);
        let back = decode(&bytes).unwrap();
        assert_eq!(back, vec![k4()]);
    }

    #[test]
    fn header_only_and_headerless() {
        assert!(decode(HEADER).unwrap().is_empty());
        assert!(decode(b"").unwrap().is_empty());
        let raw = encode_record(&k4());
        assert_eq!(decode(&raw).unwrap().len(), 1);
    }

    #[test]
    fn wide_records() {
        let g = double_wheel(7).unwrap();
        let mut bytes = b">>planar_code be<<".to_vec();
        bytes.extend_from_slice(&[0, 0, 7]);
        for v in 0..7 {
            for &w in g.rotation(v) {
                bytes.extend_from_slice(&((w + 1) as u16).to_be_bytes());
            }
            bytes.extend_from_slice(&[0, 0]);
        }
        assert_eq!(decode(&bytes).unwrap(), vec![g]);
    }

    #[test]
    fn errors() {
        assert!(matches!(decode(b">>planar_kode<<"), Err(PlanarCodeError::BadHeader)));
        let mut bytes = encode(&[k4()]);
        bytes.pop();
        assert!(matches!(decode(&bytes), Err(PlanarCodeError::TruncatedRecord { index: 0 })));
        // vertex 2 drops its neighbour 1
        let bad = [3u8, 2, 3, 0, 3, 0, 1, 2, 0];
        let results: Vec<_> = PlanarCodeReader::new(&bad[..]).collect();
        assert!(matches!(results[0], Err(PlanarCodeError::ValidationFailed { index: 0, .. })));
    }
}
