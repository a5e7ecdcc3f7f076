/** Display strings: Indonesian labels first, with an English toggle. */

export type Locale = "id" | "en";

const STRINGS: Record<string, { id: string; en: string }> = {
  "app.title": { id: "SPK Beasiswa Bidik Misi", en: "Scholarship Selection Console" },
  "nav.index": { id: "Beranda", en: "Home" },
  "nav.pendaftaran": { id: "Pendaftaran", en: "Registration" },
  "nav.periode": { id: "Periode Beasiswa", en: "Periods" },
  "nav.daftarPemohon": { id: "Daftar Pemohon", en: "Applicants" },
  "nav.seleksi": { id: "Seleksi Beasiswa", en: "Selection" },
  "nav.hasilSeleksi": { id: "Hasil Seleksi", en: "Results" },
  "nav.penerima": { id: "Penerima Beasiswa", en: "Recipients" },
  "nav.whatIf": { id: "Analisis Bobot", en: "What-if" },
  "nav.login": { id: "Login Admin", en: "Admin login" },
  "nav.logout": { id: "Keluar", en: "Log out" },
  "index.welcome": {
    id: "Sistem pendukung keputusan penerimaan beasiswa.",
    en: "Decision support for scholarship selection.",
  },
  "index.profil": { id: "Profil", en: "Profile" },
  "index.visi": { id: "Visi & Misi", en: "Vision & mission" },
  "form.nama": { id: "Nama Pemohon", en: "Applicant name" },
  "form.nim": { id: "NIM", en: "Student id (NIM)" },
  "form.jurusan": { id: "Jurusan", en: "Program" },
  "form.semester": { id: "Semester", en: "Semester" },
  "form.tahun": { id: "Tahun Beasiswa", en: "Scholarship year" },
  "form.jenis": { id: "Jenis Beasiswa", en: "Scholarship kind" },
  "form.nilai": { id: "Nilai", en: "Academic score" },
  "form.penghasilan": { id: "Penghasilan Orang Tua (Rp/bulan)", en: "Parental income (Rp/month)" },
  "form.tanggungan": { id: "Jumlah Tanggungan", en: "Dependants" },
  "form.submit": { id: "Daftar", en: "Register" },
  "form.success": { id: "Pendaftaran berhasil.", en: "Registration accepted." },
  "login.username": { id: "Nama pengguna", en: "Username" },
  "login.password": { id: "Kata sandi", en: "Password" },
  "login.submit": { id: "Masuk", en: "Sign in" },
  "login.required": { id: "Halaman admin, silakan login.", en: "Admin page, please sign in." },
  "periode.create": { id: "Buka periode baru", en: "Open a new period" },
  "periode.year": { id: "Tahun", en: "Year" },
  "periode.kind": { id: "Jenis", en: "Kind" },
  "periode.quota": { id: "Kuota", en: "Quota" },
  "periode.status": { id: "Status", en: "Status" },
  "periode.applicants": { id: "Pemohon", en: "Applicants" },
  "periode.pick": { id: "Pilih", en: "Select" },
  "periode.save": { id: "Simpan", en: "Save" },
  "periode.advance": { id: "Tutup tahap", en: "Advance status" },
  "periode.none": { id: "Belum ada periode.", en: "No periods yet." },
  "periode.pickFirst": { id: "Pilih periode terlebih dahulu.", en: "Select a period first." },
  "seleksi.run": { id: "Jalankan Seleksi", en: "Run selection" },
  "seleksi.pool": { id: "Pemohon terdaftar", en: "Registered applicants" },
  "seleksi.empty": { id: "Belum ada pemohon.", en: "No applicants yet." },
  "seleksi.fmadm": { id: "Proses Seleksi FMADM", en: "Crisp score table" },
  "seleksi.hasil": { id: "Hasil Seleksi (SAW)", en: "Final scores (SAW)" },
  "seleksi.history": { id: "Riwayat seleksi", en: "Run history" },
  "seleksi.ineligible": { id: "Tidak memenuhi syarat", en: "Ineligible" },
  "seleksi.norun": { id: "Belum diseleksi.", en: "Not selected yet." },
  "penerima.title": { id: "Penerima Beasiswa", en: "Recipients" },
  "penerima.norun": { id: "Belum diseleksi.", en: "Not selected yet." },
  "whatif.title": { id: "Analisis Bobot (what-if)", en: "Weight what-if analysis" },
  "whatif.sum": { id: "Jumlah bobot", en: "Weight sum" },
  "whatif.distribute": { id: "Bagikan sisa", en: "Distribute remainder" },
  "whatif.badge": { id: "Berbeda dari hasil tersimpan", en: "Differs from persisted run" },
  "whatif.apply": { id: "Terapkan & seleksi ulang", en: "Apply and re-run" },
  "whatif.invalid": { id: "Bobot harus berjumlah 1.", en: "Weights must sum to 1." },
  "whatif.leave": {
    id: "Perubahan bobot belum diterapkan. Tinggalkan halaman?",
    en: "Weight edits are not applied yet. Leave the page?",
  },
  "common.rank": { id: "Peringkat", en: "Rank" },
  "common.score": { id: "Nilai Rating", en: "Score" },
  "common.no": { id: "No", en: "No" },
  "common.error": { id: "Terjadi kesalahan", en: "Something went wrong" },
  "common.emptyState": { id: "Tidak ada data.", en: "Nothing here." },
};

export function translate(locale: Locale, key: string): string {
  const entry = STRINGS[key];
  if (!entry) return key;
  return entry[locale];
}
